#include "cheb/cubic.hpp"

#include <array>

namespace cheb {

BigInt form_discriminant(const BinaryCubic& F) {
    const BigInt &a = F.a, &b = F.b, &c = F.c, &d = F.d;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

BinaryCubic form_of(const ZPoly& f) {
    if (f.degree() != 3) throw ValidationError("form_of needs a cubic");
    return {f[3], f[2], f[1], f[0]};
}

namespace {

using Bin = std::array<BigInt, 4>;  // coefficients of X^3, X^2Y, XY^2, Y^3

BinaryCubic transform(const BinaryCubic& F, const BigInt& u, const BigInt& r, const BigInt& v, const BigInt& s) {
    // F(uX + rY, vX + sY)
    auto lin_mul = [](const std::vector<BigInt>& p, const BigInt& x, const BigInt& y) {
        std::vector<BigInt> q(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i] * x;
            q[i + 1] += p[i] * y;
        }
        return q;
    };
    const BigInt* co[4] = {&F.a, &F.b, &F.c, &F.d};
    Bin out{0, 0, 0, 0};
    for (int k = 0; k < 4; ++k) {
        std::vector<BigInt> p{1};
        for (int i = 0; i < 3 - k; ++i) p = lin_mul(p, u, r);
        for (int i = 0; i < k; ++i) p = lin_mul(p, v, s);
        for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] += *co[k] * p[static_cast<std::size_t>(i)];
    }
    return {out[0], out[1], out[2], out[3]};
}

BigInt md(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    return r < 0 ? BigInt(r + m) : r;
}

// One enlargement step at p, or false if the form is p-maximal.
bool enlarge(BinaryCubic& F, u64 p) {
    const BigInt P = p, P2 = BigInt(p) * p;
    if (md(F.a, P) == 0 && md(F.b, P) == 0 && md(F.c, P) == 0 && md(F.d, P) == 0) {
        F = {F.a / P, F.b / P, F.c / P, F.d / P};
        return true;
    }
    auto val = [&](const BigInt& x, const BigInt& y) { return F.a * x * x * x + F.b * x * x * y + F.c * x * y * y + F.d * y * y * y; };
    auto fx = [&](const BigInt& x, const BigInt& y) { return 3 * F.a * x * x + 2 * F.b * x * y + F.c * y * y; };
    auto fy = [&](const BigInt& x, const BigInt& y) { return F.b * x * x + 2 * F.c * x * y + 3 * F.d * y * y; };
    auto try_point = [&](const BigInt& u, const BigInt& v, const BigInt& r, const BigInt& s) {
        if (md(val(u, v), P) != 0 || md(fx(u, v), P) != 0 || md(fy(u, v), P) != 0) return false;
        if (md(val(u, v), P2) != 0) return false;
        BinaryCubic G = transform(F, u, r, v, s);
        F = {G.a / P2, G.b / P, G.c, G.d * P};
        return true;
    };
    if (try_point(1, 0, 0, 1)) return true;
    for (u64 t = 0; t < p; ++t)
        if (try_point(BigInt(t), 1, BigInt(t) - 1, 1)) return true;
    return false;
}

}  // namespace

BigInt cubic_field_discriminant(const ZPoly& f) {
    BinaryCubic F = form_of(f);
    BigInt D = form_discriminant(F);
    if (D == 0) throw ValidationError("cubic has zero discriminant");
    BigInt absD = boost::multiprecision::abs(D);
    if (absD > BigInt(UINT64_MAX)) throw CapError("cubic_field_discriminant: discriminant too large");
    for (auto [p, e] : factor_u64(absD.convert_to<u64>())) {
        if (e < 2) continue;
        while (true) {
            BigInt cur = form_discriminant(F);
            if (cur % (BigInt(p) * p) != 0) break;
            if (!enlarge(F, p)) break;
        }
    }
    return form_discriminant(F);
}

}  // namespace cheb
