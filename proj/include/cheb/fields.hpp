#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cheb/poly.hpp"

namespace cheb {

struct FieldRecord {
    int degree = 0;
    ZPoly poly;
    BigInt disc;  // field discriminant, signed
    int r1 = 0, r2 = 0;
    std::string label;
    std::vector<std::string> tags;
    long long conductor = 0;  // cyclic families only

    BigInt abs_disc() const { return boost::multiprecision::abs(disc); }
};

// degree|disc|signature|label|coeffs|tags
std::string to_record_line(const FieldRecord& r);
FieldRecord parse_record_line(const std::string& line);

// Canonical order: |D|, then signed D, then polynomial.
bool record_less(const FieldRecord& a, const FieldRecord& b);

struct GaloisLabel {
    std::string label;
    bool heuristic = false;
};
// Degree 2..5, irreducible. Throws ValidationError for reducible input.
GaloisLabel galois_label(const ZPoly& f);

// Factor-degree patterns at the first `count` primes not dividing `avoid` or the
// leading coefficient.
std::vector<std::vector<int>> frobenius_fingerprint(const ZPoly& f, const BigInt& avoid, int count);
// Two defining polynomials of the same degree and discriminant are taken to define the
// same field when their patterns agree at the first `count` primes good for both.
bool same_fingerprint(const ZPoly& f, const ZPoly& g, int count);

struct EnumerationStats {
    std::size_t candidates = 0;  // polynomials in the box
    std::size_t accepted = 0;    // irreducible with square-free disc within bound
    std::size_t duplicates = 0;
};

// Monic degree-n polynomials with |coefficients| <= H, irreducible, square-free
// discriminant of absolute value <= X, deduplicated. Degree 2 lists the quadratic
// fields of fundamental discriminant |D| <= X instead (H is not used).
std::vector<FieldRecord> enumerate_squarefree_disc_fields(int n, long long X, int H, int fingerprint_len = 100,
                                                          int threads = 1, EnumerationStats* stats = nullptr);

struct CubicSearch {
    std::vector<FieldRecord> fields;  // field discriminants in the requested range
    std::vector<int> heights;         // successive box heights tried
    std::vector<std::size_t> counts;  // field count after each height
    bool complete = false;            // box covered the Hunter bound
    bool stable = false;              // last two counts agree
};

// All cubic fields with lo <= D_K <= hi (D_K != 0), from monic x^3 + a x^2 + b x + c with
// a in {-1, 0, 1} and |b|, |c| bounded by Hunter's theorem; the box height is raised
// 4, 8, 16, ... until it covers the bound.
CubicSearch cubic_fields_by_disc(long long lo, long long hi, int threads = 1);

struct ConductorRow {
    long long conductor = 0;
    bool wild = false;  // divisible by p^2
    int omega = 0;      // number of tame prime factors
    long long constructed = 0;
    long long euler_coefficient = 0;  // Phi(p)^omega over the tame primes
    Rational ratio;                   // euler_coefficient / constructed
};

struct CyclicResult {
    int p = 0;
    long double X = 0;
    std::vector<FieldRecord> fields;
    std::vector<ConductorRow> conductors;
};

// Degree-p cyclic fields of conductor f with f^(p-1) <= X, p in {3,5,7}.
CyclicResult cyclic_fields(int p, long double X);

// Minimal polynomial of the Gaussian period for the order-p character of (Z/fZ)^x
// with local exponents `exps` (one per prime factor, in increasing order).
ZPoly gaussian_period_poly(int p, long long f, const std::vector<int>& exps);

struct CensusReport {
    std::vector<double> grid;
    std::vector<long long> counts;
    double exponent = 0;
    double intercept = 0;
    double residual = 0;  // RMS residual of the log-log fit
    std::map<long long, long long> histogram;  // multiplicity -> number of discriminants
    long long max_multiplicity = 0;
    std::size_t distinct = 0;
    bool height_limited = false;
    bool restricted = false;  // keyed by the Omega-restricted discriminant
};

// Geometric grid of k points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int k);

// |D| with the primes of omega removed.
BigInt restricted_disc(const BigInt& D, const std::set<u64>& omega);

CensusReport family_census(const std::vector<FieldRecord>& records, const std::vector<double>& grid,
                           const std::set<u64>& omega = {}, bool height_limited = false);

// Fundamental discriminant of Q(sqrt(D)).
long long fundamental_part(long long D);

}  // namespace cheb
