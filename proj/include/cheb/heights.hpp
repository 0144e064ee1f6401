#pragma once

#include <string>
#include <vector>

#include "cheb/fields.hpp"

namespace cheb {

// Absolute multiplicative Weil height from a minimal polynomial: M(f)^(1/deg).
// The polynomial is made primitive with positive leading coefficient first.
// Throws ValidationError for reducible input or degree outside 1..5.
double weil_height(const BigPoly& minpoly);
double weil_height(const ZPoly& minpoly);

// Characteristic polynomial of alpha = sum a[i] theta^i, theta a root of the monic f.
// Equals Res_theta(f(theta), x - alpha(theta)); it is the minimal polynomial exactly
// when it is square-free.
BigPoly charpoly(const ZPoly& f, const std::vector<long long>& a);

double silverman_floor(int n, const BigInt& D);
double thm15_bound(int n, const BigInt& D);

struct SmallGenResult {
    bool found = false;           // false: every candidate lies in a proper subfield
    std::vector<long long> alpha;  // a0..a(n-1) in the power basis of the defining root
    BigPoly minpoly;
    double H = 0;
    double bound = 0;   // 2 |D|^(1/(2n))
    double floor = 0;   // Silverman lower bound
    bool thm15_ok = false;
    bool silverman_ok = true;  // over every candidate evaluated
    bool boundary = false;     // some candidate met the Silverman floor to 1e-9
    std::size_t candidates = 0, generators = 0, pruned = 0, silverman_violations = 0;
};

// Exhaustive search over |a_i| <= height (alpha up to sign). Candidates whose
// coefficient lower bound already exceeds the running best are not root-found; their
// Silverman check follows from that bound.
SmallGenResult small_generator(const FieldRecord& field, int height, int threads = 1);

}  // namespace cheb
