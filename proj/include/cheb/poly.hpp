#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cheb/arith.hpp"

namespace cheb {

// Integer polynomial; c[i] is the coefficient of x^i, trailing zeros stripped.
struct ZPoly {
    std::vector<long long> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<long long> coeffs);
    // Coefficients from the leading one down, e.g. {1, 0, -1, -1} is x^3 - x - 1.
    static ZPoly from_high(const std::vector<long long>& high);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long lead() const { return c.empty() ? 0 : c.back(); }
    long long operator[](int i) const {
        return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0;
    }
    bool is_monic() const { return lead() == 1; }
    std::vector<long long> high() const;

    friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

// Lexicographic on the coefficient list from the leading term down.
bool poly_less(const ZPoly& a, const ZPoly& b);

std::string to_string(const ZPoly& f);
// "1,0,-1,-1": leading coefficient first.
std::string coeff_string(const ZPoly& f);

using BigPoly = std::vector<BigInt>;  // low to high
BigPoly to_big(const ZPoly& f);
void trim(BigPoly& f);
BigPoly derivative(const BigPoly& f);
BigInt eval(const BigPoly& f, const BigInt& x);
BigInt determinant(std::vector<std::vector<BigInt>> m);  // Bareiss
BigInt resultant(const BigPoly& f, const BigPoly& g);
BigInt discriminant(const BigPoly& f);
BigInt discriminant(const ZPoly& f);
BigInt content(const BigPoly& f);
// Quotient of f by g when g divides f exactly over Z; nullopt otherwise.
std::optional<BigPoly> exact_divide(const BigPoly& f, const BigPoly& g);

// Exact irreducibility over Q for 1 <= degree <= 5. Throws ValidationError otherwise.
bool is_irreducible(const ZPoly& f);

// Factor degrees of f mod p, sorted descending; nullopt when p divides the leading
// coefficient or f is not square-free mod p.
std::optional<std::vector<int>> factor_degrees_mod_p(const ZPoly& f, u64 p);

// Cyclotomic polynomial Phi_n.
BigPoly cyclotomic(int n);

}  // namespace cheb
