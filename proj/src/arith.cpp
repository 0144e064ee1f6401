#include "cheb/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace cheb {

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw ValidationError("invmod: not invertible");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

namespace {

const std::vector<u64>& small_primes() {
    static const std::vector<u64> ps = primes_up_to(1u << 20);
    return ps;
}

}  // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
    std::vector<std::pair<u64, int>> out;
    if (n < 2) return out;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        u64 lim = small_primes().back();
        if (n > lim * lim && !is_prime_u64(n))
            throw CapError("factor_u64: cofactor beyond trial-division reach");
        out.emplace_back(n, 1);
    }
    return out;
}

u64 primitive_root(u64 p) {
    if (p == 2) return 1;
    auto f = factor_u64(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : f)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square_u64(u64 n) {
    u64 r = isqrt_u64(n);
    return r * r == n;
}

bool is_squarefree_u64(u64 n) {
    if (n == 0) return false;
    for (auto [p, e] : factor_u64(n))
        if (e > 1) return false;
    return true;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw ValidationError("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

bool is_squarefree(const BigInt& n) {
    BigInt m = boost::multiprecision::abs(n);
    if (m == 0) return false;
    if (m <= BigInt(UINT64_MAX)) {
        u64 v = m.convert_to<u64>();
        for (u64 p : small_primes()) {
            if (p * p * p > v) break;
            if (v % p) continue;
            v /= p;
            if (v % p == 0) return false;
        }
        // Every prime factor of v now exceeds the cube root of the original, so v is
        // 1, a prime, or a product of two primes; square-free unless a perfect square.
        return v == 1 || !is_square_u64(v);
    }
    const auto& ps = small_primes();
    for (u64 p : ps) {
        BigInt pb = p;
        if (pb * pb * pb > m) break;
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return false;
    }
    BigInt lim = ps.back();
    if (lim * lim * lim < boost::multiprecision::abs(n))
        throw CapError("is_squarefree: input beyond trial-division reach");
    return m == 1 || !is_square(m);
}

bool is_fundamental_discriminant(long long D) {
    if (D == 0 || D == 1) return false;
    long long r = ((D % 4) + 4) % 4;
    u64 a = static_cast<u64>(D < 0 ? -D : D);
    if (r == 1) return is_squarefree_u64(a);
    if (r != 0) return false;
    long long m = D / 4;
    long long mr = ((m % 4) + 4) % 4;
    if (mr != 2 && mr != 3) return false;
    return is_squarefree_u64(a / 4);
}

int omega_u64(u64 n) { return static_cast<int>(factor_u64(n).size()); }

}  // namespace cheb
