#include "cheb/roots.hpp"

#include <algorithm>
#include <cmath>

namespace cheb {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

cld horner(const std::vector<long double>& a, cld z, cld* deriv) {
    cld p = 0, d = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        d = d * z + p;
        p = p * z + *it;
    }
    if (deriv) *deriv = d;
    return p;
}

long double scale_at(const std::vector<long double>& a, long double r) {
    long double s = 0, pw = 1;
    for (long double c : a) {
        s += std::fabs(c) * pw;
        pw *= r;
    }
    return s;
}

}  // namespace

std::vector<cld> poly_roots(const std::vector<long double>& coeffs) {
    std::vector<long double> a = coeffs;
    while (!a.empty() && a.back() == 0) a.pop_back();
    const int n = static_cast<int>(a.size()) - 1;
    if (n < 1) throw ValidationError("poly_roots needs degree >= 1");
    std::vector<cld> z(static_cast<std::size_t>(n));
    if (n == 1) {
        z[0] = -a[0] / a[1];
        return z;
    }
    // Start on a circle of radius given by the geometric mean bound, with an
    // irrational angular offset so no start point sits on a symmetry axis.
    long double rad = 0;
    for (int i = 0; i < n; ++i)
        rad = std::max(rad, std::pow(std::fabs(a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(n)]), 1.0L / (n - i)));
    if (rad == 0) rad = 1;
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(rad, 2 * kPi * k / n + 0.4L);

    for (int iter = 0; iter < 1000; ++iter) {
        long double maxstep = 0;
        for (int k = 0; k < n; ++k) {
            cld d;
            cld p = horner(a, z[static_cast<std::size_t>(k)], &d);
            if (p == cld(0)) continue;
            cld ratio = p / d;
            cld sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            cld step = ratio / (1.0L - ratio * sum);
            z[static_cast<std::size_t>(k)] -= step;
            maxstep = std::max(maxstep, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (maxstep < 1e-17L) break;
    }
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            cld d;
            cld p = horner(a, r, &d);
            if (d == cld(0) || p == cld(0)) break;
            r -= p / d;
        }
        long double s = scale_at(a, std::abs(r));
        if (std::abs(horner(a, r, nullptr)) > 1e-10L * s)
            throw ConstructionError("root finder residual check failed");
        if (std::fabs(r.imag()) <= 1e-14L * std::max(1.0L, std::abs(r))) r = cld(r.real(), 0);
    }
    std::sort(z.begin(), z.end(), [](const cld& x, const cld& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return z;
}

std::vector<cld> poly_roots(const ZPoly& f) {
    std::vector<long double> a;
    for (long long c : f.c) a.push_back(static_cast<long double>(c));
    return poly_roots(a);
}

std::vector<cld> poly_roots(const BigPoly& f) {
    std::vector<long double> a;
    for (const auto& c : f) a.push_back(c.convert_to<long double>());
    return poly_roots(a);
}

long double mahler_measure(const BigPoly& f) {
    BigPoly g = f;
    trim(g);
    if (g.empty()) throw ValidationError("Mahler measure of zero polynomial");
    long double m = boost::multiprecision::abs(g.back()).convert_to<long double>();
    if (g.size() == 1) return m;
    for (const auto& r : poly_roots(g)) m *= std::max(1.0L, std::abs(r));
    return m;
}

int real_root_count(const ZPoly& f) {
    const int n = f.degree();
    auto roots = poly_roots(f);
    int real = 0;
    for (const auto& r : roots)
        if (r.imag() == 0) ++real;
    // sign(disc) = (-1)^r2
    BigInt D = discriminant(f);
    int r2 = (n - real) / 2;
    if ((n - real) % 2 != 0 || ((r2 % 2 == 0) != (D > 0)))
        throw ConstructionError("real root count inconsistent with discriminant sign for " + to_string(f));
    return real;
}

}  // namespace cheb
