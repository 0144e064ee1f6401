#include "cheb/heights.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cheb/roots.hpp"

namespace cheb {

namespace {

struct Ovf {};

i128 cmul(i128 a, i128 b) {
    i128 r;
    if (mul_ovf(a, b, r)) throw Ovf{};
    return r;
}
i128 cadd(i128 a, i128 b) {
    i128 r;
    if (add_ovf(a, b, r)) throw Ovf{};
    return r;
}

template <class T>
using Mat = std::vector<std::vector<T>>;

// Multiplication-by-alpha matrix in the basis 1, theta, ..., theta^(n-1).
template <class T>
Mat<T> mult_matrix(const ZPoly& f, const std::vector<long long>& a, T (*mul)(T, T), T (*add)(T, T)) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Mat<T> M(n, std::vector<T>(n, T(0)));
    std::vector<T> v(n, T(0));  // alpha * theta^j, starting at j = 0
    for (std::size_t i = 0; i < n; ++i) v[i] = T(i < a.size() ? a[i] : 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) M[i][j] = v[i];
        // multiply by theta, reduce theta^n = -sum f_i theta^i
        T top = v[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) v[i] = add(v[i - 1], mul(T(-f[static_cast<int>(i)]), top));
        v[0] = mul(T(-f[0]), top);
    }
    return M;
}

// Faddeev-LeVerrier; returns coefficients low to high, monic.
template <class T>
std::vector<T> faddeev(const Mat<T>& M, T (*mul)(T, T), T (*add)(T, T)) {
    const std::size_t n = M.size();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Mat<T> Mk(n, std::vector<T>(n, T(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        Mat<T> next(n, std::vector<T>(n, T(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                T s = T(0);
                for (std::size_t l = 0; l < n; ++l) s = add(s, mul(M[i][l], Mk[l][j]));
                next[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] = add(next[i][i], c[n - k + 1]);
        Mk = next;
        T tr = T(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr = add(tr, mul(M[i][l], Mk[l][i]));
        c[n - k] = T(-tr / T(static_cast<long long>(k)));
    }
    return c;
}

BigInt bmul(BigInt a, BigInt b) { return a * b; }
BigInt badd(BigInt a, BigInt b) { return a + b; }

bool prime_degree(int n) { return n == 2 || n == 3 || n == 5; }

void make_primitive(BigPoly& f) {
    trim(f);
    if (f.empty()) throw ValidationError("zero polynomial");
    BigInt g = content(f);
    if (f.back() < 0) g = -g;
    for (auto& x : f) x /= g;
}

double height_unchecked(const BigPoly& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == 1) {
        BigInt a = boost::multiprecision::abs(f[0]), b = boost::multiprecision::abs(f[1]);
        return (a > b ? a : b).convert_to<double>();
    }
    long double M = mahler_measure(f);
    return static_cast<double>(std::pow(M, 1.0L / n));
}

// Lower bound for M(f), f monic: |c_k| <= C(n,k) M.
double mahler_lower(const BigPoly& c) {
    const int n = static_cast<int>(c.size()) - 1;
    double lb = 1, binom = 1;
    for (int k = 1; k <= n; ++k) {
        binom = binom * (n - k + 1) / k;  // C(n,k)
        double v = std::abs(c[static_cast<std::size_t>(n - k)].convert_to<double>()) / binom;
        lb = std::max(lb, v);
    }
    return lb;
}

}  // namespace

BigPoly charpoly(const ZPoly& f, const std::vector<long long>& a) {
    if (f.degree() < 1 || !f.is_monic()) throw ValidationError("charpoly needs a monic defining polynomial");
    try {
        auto M = mult_matrix<i128>(f, a, cmul, cadd);
        auto c = faddeev<i128>(M, cmul, cadd);
        BigPoly out;
        for (auto v : c) out.push_back(to_big(v));
        return out;
    } catch (const Ovf&) {
        auto M = mult_matrix<BigInt>(f, a, bmul, badd);
        return faddeev<BigInt>(M, bmul, badd);
    }
}

double weil_height(const BigPoly& minpoly) {
    BigPoly f = minpoly;
    make_primitive(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1 || n > 5) throw ValidationError("weil_height supports degree 1..5");
    ZPoly z;
    for (const auto& x : f) {
        auto v = to_ll(x);
        if (!v) throw CapError("coefficient too large for the irreducibility test");
        z.c.push_back(*v);
    }
    if (!is_irreducible(z)) throw ValidationError(to_string(z) + " is reducible");
    return height_unchecked(f);
}

double weil_height(const ZPoly& minpoly) { return weil_height(to_big(minpoly)); }

double silverman_floor(int n, const BigInt& D) {
    const double nd = n;
    const double lD = std::log(boost::multiprecision::abs(D).convert_to<double>());
    return std::pow(nd, -1 / (2 * (nd - 1))) * std::exp(lD / (2 * nd * (nd - 1)));
}

double thm15_bound(int n, const BigInt& D) {
    const double lD = std::log(boost::multiprecision::abs(D).convert_to<double>());
    return 2 * std::exp(lD / (2.0 * n));
}

SmallGenResult small_generator(const FieldRecord& field, int height, int threads) {
    const ZPoly& f = field.poly;
    const int n = f.degree();
    if (n < 2) throw ValidationError("small_generator needs degree >= 2");
    if (n > 5) throw ValidationError("small_generator supports degree <= 5");
    if (!f.is_monic()) throw ValidationError("defining polynomial must be monic");
    if (height < 1) throw ValidationError("search height must be >= 1");
    if (field.disc == 0) throw ValidationError("field discriminant missing");
    SmallGenResult res;
    res.floor = silverman_floor(n, field.disc);
    res.bound = thm15_bound(n, field.disc);
    const std::size_t side = static_cast<std::size_t>(2 * height + 1);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= side;

    struct Local {
        bool found = false;
        std::vector<long long> alpha;
        BigPoly minpoly;
        double H = 0;
        bool boundary = false;
        std::size_t candidates = 0, generators = 0, pruned = 0, violations = 0;
    };
    auto better = [](double H, const std::vector<long long>& a, double bestH, const std::vector<long long>& best) {
        if (H < bestH * (1 - 1e-12)) return true;
        if (H > bestH * (1 + 1e-12)) return false;
        return a < best;
    };
    const std::size_t T = static_cast<std::size_t>(std::max(1, threads));
    std::vector<Local> loc(T);
    auto work = [&](std::size_t w) {
        Local& L = loc[w];
        std::vector<long long> a(static_cast<std::size_t>(n));
        for (std::size_t idx = w; idx < total; idx += T) {
            std::size_t r = idx;
            for (int i = 0; i < n; ++i) {
                a[static_cast<std::size_t>(i)] = static_cast<long long>(r % side) - height;
                r /= side;
            }
            // canonical sign: highest nonzero coefficient of index >= 1 positive
            int top = n - 1;
            while (top >= 1 && a[static_cast<std::size_t>(top)] == 0) --top;
            if (top < 1) continue;  // rational
            if (a[static_cast<std::size_t>(top)] < 0) continue;
            ++L.candidates;
            BigPoly cp = charpoly(f, a);
            bool gen;
            if (prime_degree(n))
                gen = true;
            else
                gen = discriminant(cp) != 0;
            if (!gen) continue;
            ++L.generators;
            if (L.found && std::pow(mahler_lower(cp), 1.0 / n) > L.H * (1 + 1e-9)) {
                ++L.pruned;
                continue;
            }
            const double H = height_unchecked(cp);
            if (H < res.floor * (1 - 1e-9)) ++L.violations;
            if (std::abs(H - res.floor) <= 1e-9 * res.floor) L.boundary = true;
            if (!L.found || better(H, a, L.H, L.alpha)) {
                L.found = true;
                L.H = H;
                L.alpha = a;
                L.minpoly = cp;
            }
        }
    };
    std::vector<std::thread> pool;
    if (T == 1) {
        work(0);
    } else {
        for (std::size_t w = 0; w < T; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& L : loc) {
        res.candidates += L.candidates;
        res.generators += L.generators;
        res.pruned += L.pruned;
        res.silverman_violations += L.violations;
        res.boundary = res.boundary || L.boundary;
        if (L.found && (!res.found || better(L.H, L.alpha, res.H, res.alpha))) {
            res.found = true;
            res.H = L.H;
            res.alpha = L.alpha;
            res.minpoly = L.minpoly;
        }
    }
    res.silverman_ok = res.silverman_violations == 0;
    res.thm15_ok = res.found && res.H <= res.bound * (1 + 1e-8);
    return res;
}

}  // namespace cheb
