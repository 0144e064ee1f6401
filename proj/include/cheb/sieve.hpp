#pragma once

#include <functional>
#include <vector>

#include "cheb/arith.hpp"

namespace cheb {

constexpr u64 kSieveCap = 100000000;

// Calls fn(p) for each prime lo <= p <= hi in increasing order (segmented sieve).
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);
std::vector<u64> primes_in(u64 lo, u64 hi);
// pi(x) via a plain (unsegmented) sieve; used as an independent check.
u64 prime_pi_simple(u64 x);

}  // namespace cheb
