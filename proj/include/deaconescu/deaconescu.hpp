#pragma once

#include "certificates.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "near_miss.hpp"
#include "predicates.hpp"
#include "primality.hpp"
#include "rational.hpp"
#include "scan.hpp"
#include "serialization.hpp"
#include "sieve.hpp"
#include "totient.hpp"
