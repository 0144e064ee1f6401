#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

using i128 = __int128;
using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}
u64 powmod(u64 b, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // requires gcd(a, m) = 1

bool is_prime_u64(u64 n);
std::vector<u64> primes_up_to(u64 n);
// Trial-division factorization; fine for n up to ~1e14.
std::vector<std::pair<u64, int>> factor_u64(u64 n);
u64 primitive_root(u64 p);  // p prime

u64 isqrt_u64(u64 n);
bool is_square_u64(u64 n);
bool is_squarefree_u64(u64 n);

BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);  // false for negatives
// Square-free test for |n|; trial division to the cube root, then a perfect-square check
// of the cofactor.
bool is_squarefree(const BigInt& n);

// D = 1 mod 4 square-free, or D = 4m with m = 2,3 mod 4 square-free; D != 0, 1.
bool is_fundamental_discriminant(long long D);
int omega_u64(u64 n);

// Checked arithmetic for the int128 fast paths; sets overflow instead of wrapping.
inline bool add_ovf(i128 a, i128 b, i128& r) { return __builtin_add_overflow(a, b, &r); }
inline bool mul_ovf(i128 a, i128 b, i128& r) { return __builtin_mul_overflow(a, b, &r); }

inline BigInt to_big(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<u64>(u >> 64);
    r <<= 64;
    r += static_cast<u64>(u);
    return neg ? BigInt(-r) : r;
}

inline std::optional<long long> to_ll(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) return std::nullopt;
    return v.convert_to<long long>();
}

}  // namespace cheb
