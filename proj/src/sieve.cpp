#include "cheb/sieve.hpp"

#include <algorithm>

namespace cheb {

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (hi > kSieveCap) throw CapError("sieve limit " + std::to_string(hi) + " exceeds cap " + std::to_string(kSieveCap));
    if (hi < 2 || lo > hi) return;
    lo = std::max<u64>(lo, 2);
    const auto base = primes_up_to(isqrt_u64(hi));
    constexpr u64 kSeg = 1 << 18;
    std::vector<char> seg(kSeg);
    for (u64 s = lo; s <= hi; s += kSeg) {
        const u64 e = std::min(hi, s + kSeg - 1);
        std::fill(seg.begin(), seg.begin() + static_cast<long>(e - s + 1), 1);
        for (u64 p : base) {
            if (p * p > e) break;
            u64 start = std::max(p * p, (s + p - 1) / p * p);
            for (u64 m = start; m <= e; m += p) seg[m - s] = 0;
        }
        for (u64 i = s; i <= e; ++i)
            if (seg[i - s]) fn(i);
        if (e == hi) break;
    }
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
}

u64 prime_pi_simple(u64 x) {
    if (x > kSieveCap) throw CapError("prime_pi_simple beyond cap");
    return primes_up_to(x).size();
}

}  // namespace cheb
