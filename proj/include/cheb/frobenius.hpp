#pragma once

#include <string>
#include <vector>

#include "cheb/permgroup.hpp"
#include "cheb/poly.hpp"
#include "cheb/sieve.hpp"

namespace cheb {

using CycleType = std::vector<int>;  // descending parts

// Factor-degree multiset of f mod p. Throws RamifiedPrimeError when p divides the
// polynomial discriminant or the leading coefficient.
CycleType frobenius_pattern(const ZPoly& f, u64 p);

// "2+1", "1+1+1", ...
std::string cycle_type_label(const CycleType& t);
CycleType parse_cycle_type(const std::string& s);

// Logarithmic integral from 2: the integral of dt / log t over [2, x], by adaptive
// Gauss-Kronrod quadrature in the variable u = log t.
long double li(long double x);

// Permutation group on the roots for a Galois label (C2, S3, C3, S4, A4, D4, C4, K4,
// S5, A5, C5, D5, F20); "other(5)" maps to S5.
PermGroup galois_group_for(const std::string& label);

// Cycle types realized by elements of G, with their class-union sizes.
std::vector<std::pair<CycleType, std::size_t>> realized_cycle_types(const PermGroup& G);

// #{p <= x : p does not divide disc(f), pattern(p) in types}.
long long pi_class(const ZPoly& f, const std::vector<CycleType>& types, u64 x, const std::string& group_label = "");

struct ChebClass {
    CycleType type;
    std::size_t size = 0;    // elements of G with this cycle type
    double weight = 0;       // size / |G|
    bool merged = false;     // union of more than one conjugacy class
};

struct ChebStats {
    std::string group;
    std::size_t group_order = 0;
    std::vector<ChebClass> classes;
    std::vector<u64> grid;
    std::vector<std::vector<long long>> counts;  // [grid point][class]
    std::vector<long long> ramified;             // primes dividing disc(f), per grid point
    std::vector<long long> pi;                   // pi(x), independent sieve
    std::vector<long double> li;

    long double main_term(std::size_t gi, std::size_t ci) const;
    long double normalized_error(std::size_t gi, std::size_t ci) const;  // (pi_C - main) / (x / log^2 x)
    long double ratio(std::size_t gi, std::size_t ci) const;             // pi_C / main
    bool sum_identity_holds(std::size_t gi) const;
};

ChebStats chebotarev_report(const ZPoly& f, const std::string& group_label, const std::vector<u64>& grid, int threads = 1);

struct CorollaryResult {
    long double bound = 0;          // |D|^sigma
    long long split_count = 0;      // completely split primes <= bound
    long double lower_target = 0;   // bound / log(bound)
    bool dyadic_found = false;      // a split prime in (bound, 2 bound]
    u64 first_dyadic = 0;
};

CorollaryResult corollary_checks(const ZPoly& f, double sigma);

}  // namespace cheb
