#pragma once

#include "injres/sampling.hpp"
#include "support.hpp"

namespace injres::testing {

using sampling::kPrimes;
using sampling::random_chain;
using sampling::random_e0;
using sampling::random_ezw;
using sampling::random_phi;
using sampling::random_prime;
using sampling::random_principal;

}  // namespace injres::testing
