#pragma once

#include "cheb/poly.hpp"

namespace cheb {

// Binary cubic form a x^3 + b x^2 y + c x y^2 + d y^3.
struct BinaryCubic {
    BigInt a, b, c, d;
};

BigInt form_discriminant(const BinaryCubic& F);
BinaryCubic form_of(const ZPoly& f);  // degree-3 polynomial -> form with the same discriminant

// Discriminant of the maximal order of Q[x]/f for an irreducible cubic f, by
// enlarging the order of the associated binary cubic form one prime at a time.
BigInt cubic_field_discriminant(const ZPoly& f);

}  // namespace cheb
