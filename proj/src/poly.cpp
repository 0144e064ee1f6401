#include "cheb/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace cheb {

ZPoly::ZPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::from_high(const std::vector<long long>& high) {
    return ZPoly(std::vector<long long>(high.rbegin(), high.rend()));
}

std::vector<long long> ZPoly::high() const { return {c.rbegin(), c.rend()}; }

bool poly_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.high() < b.high();
}

std::string to_string(const ZPoly& f) {
    if (f.c.empty()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        long long a = f[i];
        if (a == 0) continue;
        unsigned long long m = a < 0 ? 0ULL - static_cast<unsigned long long>(a) : static_cast<unsigned long long>(a);
        if (s.empty())
            s += a < 0 ? "-" : "";
        else
            s += a < 0 ? " - " : " + ";
        if (m != 1 || i == 0) s += std::to_string(m);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::string coeff_string(const ZPoly& f) {
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        if (i != f.degree()) s += ',';
        s += std::to_string(f[i]);
    }
    return s;
}

BigPoly to_big(const ZPoly& f) {
    BigPoly r;
    for (long long a : f.c) r.emplace_back(a);
    return r;
}

void trim(BigPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

BigPoly derivative(const BigPoly& f) {
    BigPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    trim(d);
    return d;
}

BigInt eval(const BigPoly& f, const BigInt& x) {
    BigInt r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt resultant(const BigPoly& f, const BigPoly& g) {
    const int n = static_cast<int>(f.size()) - 1, m = static_cast<int>(g.size()) - 1;
    if (n < 0 || m < 0) return 0;
    if (n == 0) return boost::multiprecision::pow(f[0], static_cast<unsigned>(m));
    if (m == 0) return boost::multiprecision::pow(g[0], static_cast<unsigned>(n));
    const int N = n + m;
    std::vector<std::vector<BigInt>> S(static_cast<std::size_t>(N), std::vector<BigInt>(static_cast<std::size_t>(N), 0));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(n - i)];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + i)] = g[static_cast<std::size_t>(m - i)];
    return determinant(std::move(S));
}

BigInt discriminant(const BigPoly& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) throw ValidationError("discriminant needs degree >= 1");
    if (n == 1) return 1;
    BigInt r = resultant(f, derivative(f)) / f.back();
    return (n * (n - 1) / 2) % 2 ? BigInt(-r) : r;
}

BigInt discriminant(const ZPoly& f) {
    if (f.degree() == 2) {
        i128 a = f[2], b = f[1], c = f[0];
        return to_big(b * b - 4 * a * c);
    }
    if (f.degree() == 3 && f.is_monic()) {
        i128 a = f[2], b = f[1], c = f[0];
        // Inputs beyond 2^20 could overflow the closed form; fall through to the resultant.
        if (std::max({a < 0 ? -a : a, b < 0 ? -b : b, c < 0 ? -c : c}) < (i128(1) << 20))
            return to_big(a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c);
    }
    return discriminant(to_big(f));
}

BigInt content(const BigPoly& f) {
    BigInt g = 0;
    for (const auto& a : f) g = boost::multiprecision::gcd(g, a);
    return g;
}

std::optional<BigPoly> exact_divide(const BigPoly& f, const BigPoly& g) {
    if (g.empty()) throw ValidationError("division by zero polynomial");
    BigPoly r = f;
    trim(r);
    const int m = static_cast<int>(g.size()) - 1;
    if (static_cast<int>(r.size()) - 1 < m) {
        if (r.empty()) return BigPoly{};
        return std::nullopt;
    }
    BigPoly q(r.size() - static_cast<std::size_t>(m), 0);
    for (int i = static_cast<int>(r.size()) - 1; i >= m; --i) {
        const BigInt& top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (top % g.back() != 0) return std::nullopt;
        BigInt t = top / g.back();
        q[static_cast<std::size_t>(i - m)] = t;
        for (int j = 0; j <= m; ++j) r[static_cast<std::size_t>(i - m + j)] -= t * g[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < m; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    trim(q);
    return q;
}

namespace {

std::vector<u64> divisors(u64 n) {
    std::vector<u64> d{1};
    for (auto [p, e] : factor_u64(n)) {
        std::size_t k = d.size();
        u64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < k; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Degrees d for which a multiset of factor degrees has a sub-multiset summing to d.
std::vector<bool> subset_sums(const std::vector<int>& parts, int n) {
    std::vector<bool> ok(static_cast<std::size_t>(n + 1), false);
    ok[0] = true;
    for (int p : parts)
        for (int s = n; s >= p; --s)
            if (ok[static_cast<std::size_t>(s - p)]) ok[static_cast<std::size_t>(s)] = true;
    return ok;
}

}  // namespace

bool is_irreducible(const ZPoly& f0) {
    const int n = f0.degree();
    if (n < 1 || n > 5) throw ValidationError("irreducibility test supports degree 1..5");
    if (n == 1) return true;
    if (f0[0] == 0) return false;
    BigPoly F = to_big(f0);
    {
        BigInt g = content(F);
        for (auto& a : F) a /= g;
    }
    if (n <= 5 && F.back() <= BigInt(INT64_MAX) && F.back() >= BigInt(INT64_MIN)) {
        // Frobenius patterns first: a factor of degree d forces every unramified pattern
        // to contain a sub-multiset summing to d.
        ZPoly fz = f0;
        std::vector<bool> possible(static_cast<std::size_t>(n / 2 + 1), true);
        int used = 0;
        for (u64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
            auto pat = factor_degrees_mod_p(fz, p);
            if (!pat) continue;
            ++used;
            auto ok = subset_sums(*pat, n);
            bool any = false;
            for (int d = 1; d <= n / 2; ++d) {
                possible[static_cast<std::size_t>(d)] = possible[static_cast<std::size_t>(d)] && ok[static_cast<std::size_t>(d)];
                any = any || possible[static_cast<std::size_t>(d)];
            }
            if (!any) return true;
            if (used >= 12) break;
        }
    }
    // Exact search for a linear or quadratic factor.
    const BigInt& lead = F.back();
    const BigInt& c0 = F.front();
    if (boost::multiprecision::abs(lead) > BigInt(UINT64_MAX) || boost::multiprecision::abs(c0) > BigInt(UINT64_MAX))
        throw CapError("irreducibility test: coefficients too large");
    auto dl = divisors(boost::multiprecision::abs(lead).convert_to<u64>());
    auto dc = divisors(boost::multiprecision::abs(c0).convert_to<u64>());
    for (u64 q : dl)
        for (u64 pp : dc)
            for (int s : {1, -1}) {
                // root (s*pp)/q: q^n f(s*pp/q) = sum F_i (s pp)^i q^(n-i)
                BigInt acc = 0, num = BigInt(s) * pp, qq = q;
                BigInt pw = 1;
                for (int i = 0; i <= n; ++i) {
                    acc += F[static_cast<std::size_t>(i)] * pw * boost::multiprecision::pow(qq, static_cast<unsigned>(n - i));
                    pw *= num;
                }
                if (acc == 0) return false;
            }
    if (n < 4) return true;
    // Quadratic factor a x^2 + b x + c with a | lead, c | c0, |b| <= 2 a R.
    BigInt maxc = 0;
    for (const auto& a : F) maxc = std::max(maxc, BigInt(boost::multiprecision::abs(a)));
    const long double R = 1.0L + static_cast<long double>(maxc) / static_cast<long double>(boost::multiprecision::abs(lead));
    const BigInt f1 = eval(F, 1), fm1 = eval(F, -1), f2 = eval(F, 2);
    for (u64 a : dl)
        for (u64 cc : dc)
            for (int s : {1, -1}) {
                long long c = s * static_cast<long long>(cc);
                long long bmax = static_cast<long long>(2.0L * a * R) + 1;
                for (long long b = -bmax; b <= bmax; ++b) {
                    BigInt g1 = BigInt(a) + b + c, gm1 = BigInt(a) - b + c, g2 = BigInt(4 * a) + 2 * b + c;
                    if (g1 == 0 || gm1 == 0 || g2 == 0) continue;  // has a rational root; excluded above
                    if (f1 % g1 != 0 || fm1 % gm1 != 0 || f2 % g2 != 0) continue;
                    if (exact_divide(F, BigPoly{BigInt(c), BigInt(b), BigInt(a)})) return false;
                }
            }
    return true;
}

namespace {

using Fp = std::vector<u64>;

void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp fp_mod(Fp a, const Fp& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 inv = invmod(m.back(), p);
    while (a.size() > dm && !a.empty()) {
        u64 t = mulmod(a.back(), inv, p);
        std::size_t sh = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) a[sh + j] = (a[sh + j] + p - mulmod(t, m[j], p)) % p;
        trim(a);
    }
    return a;
}

Fp fp_mul(const Fp& a, const Fp& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return r;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

Fp fp_div(Fp a, const Fp& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    if (a.size() <= dm) return {};
    Fp q(a.size() - dm, 0);
    const u64 inv = invmod(m.back(), p);
    while (a.size() > dm) {
        u64 t = mulmod(a.back(), inv, p);
        std::size_t sh = a.size() - 1 - dm;
        q[sh] = t;
        for (std::size_t j = 0; j <= dm; ++j) a[sh + j] = (a[sh + j] + p - mulmod(t, m[j], p)) % p;
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    return q;
}

Fp fp_powmod(Fp b, u64 e, const Fp& m, u64 p) {
    Fp r{1};
    b = fp_mod(b, m, p);
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, b, p), m, p);
        e >>= 1;
        if (e) b = fp_mod(fp_mul(b, b, p), m, p);
    }
    return r;
}

}  // namespace

std::optional<std::vector<int>> factor_degrees_mod_p(const ZPoly& f, u64 p) {
    if (p < 2) throw ValidationError("modulus must be prime");
    Fp g(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        long long v = f.c[i] % static_cast<long long>(p);
        g[i] = static_cast<u64>(v < 0 ? v + static_cast<long long>(p) : v);
    }
    trim(g);
    if (static_cast<int>(g.size()) - 1 != f.degree()) return std::nullopt;
    {
        u64 inv = invmod(g.back(), p);
        for (auto& x : g) x = mulmod(x, inv, p);
    }
    Fp dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(mulmod(g[i], i % p, p));
    trim(dg);
    if (fp_gcd(g, dg, p).size() != 1) return std::nullopt;

    std::vector<int> degs;
    Fp h{0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(g.size()) - 1; ++d) {
        h = fp_powmod(h, p, g, p);
        Fp t = h;
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        Fp q = fp_gcd(g, t, p);
        if (q.size() > 1) {
            for (std::size_t k = 0; k < (q.size() - 1) / static_cast<std::size_t>(d); ++k) degs.push_back(d);
            g = fp_div(g, q, p);
            h = fp_mod(h, g, p);
        }
    }
    if (g.size() > 1) degs.push_back(static_cast<int>(g.size()) - 1);
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

namespace {

int mobius(u64 n) {
    int m = 1;
    for (auto [q, e] : factor_u64(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

// prod over d | n of (y^d - 1)^mu(n/d): multiply the numerator factors, then divide
// out the denominator binomials, all in checked int128.
std::optional<std::vector<i128>> cyclotomic_i128(int n) {
    std::vector<int> num, den;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(static_cast<u64>(n / d));
        if (mu == 1) num.push_back(d);
        if (mu == -1) den.push_back(d);
    }
    std::vector<i128> r{1};
    for (int d : num) {
        std::vector<i128> t(r.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (add_ovf(t[i + static_cast<std::size_t>(d)], r[i], t[i + static_cast<std::size_t>(d)])) return std::nullopt;
            if (add_ovf(t[i], -r[i], t[i])) return std::nullopt;
        }
        r = std::move(t);
    }
    for (int d : den) {
        // r = q (y^d - 1): r[i] = q[i-d] - q[i]
        const std::size_t D = static_cast<std::size_t>(d);
        std::vector<i128> q(r.size() - D, 0);
        for (std::size_t i = r.size() - 1; i >= D; --i) {
            i128 qi = i < q.size() ? q[i] : 0;
            if (add_ovf(r[i], qi, q[i - D])) return std::nullopt;
            if (i == D) break;
        }
        for (std::size_t i = 0; i < D; ++i)
            if (r[i] != -(i < q.size() ? q[i] : 0)) throw std::logic_error("cyclotomic: inexact division");
        r = std::move(q);
    }
    return r;
}

}  // namespace

BigPoly cyclotomic(int n) {
    if (n < 1) throw ValidationError("cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<int, BigPoly> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    BigPoly r;
    if (auto fast = cyclotomic_i128(n)) {
        for (i128 v : *fast) r.push_back(to_big(v));
    } else {
        r.assign(static_cast<std::size_t>(n) + 1, 0);
        r[0] = -1;
        r[static_cast<std::size_t>(n)] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d) continue;
            auto q = exact_divide(r, cyclotomic(d));
            if (!q) throw std::logic_error("cyclotomic: inexact division");
            r = std::move(*q);
        }
    }
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, r);
    return r;
}

}  // namespace cheb
