#pragma once

#include <string>
#include <vector>

#include "cheb/arith.hpp"

namespace cheb {

constexpr long long kClassGroupCap = 100000000;
// Above this class number the multiplication table is not stored; composition is
// then done directly (still exact).
constexpr long long kTableLimit = 10000;

// a x^2 + b xy + c y^2
struct QForm {
    long long a = 0, b = 0, c = 0;
    friend bool operator==(const QForm&, const QForm&) = default;
    friend auto operator<=>(const QForm&, const QForm&) = default;
};

std::string to_string(const QForm& f);
long long form_disc(const QForm& f);
bool is_reduced(const QForm& f);
QForm reduce(QForm f);
QForm identity_form(long long D);
QForm inverse(const QForm& f);
QForm compose(const QForm& f, const QForm& g);

// All reduced forms of discriminant D, sorted.
std::vector<QForm> reduced_forms(long long D);

struct ClassGroupRecord {
    long long D = 0;
    long long h = 0;
    std::vector<long long> divisors;  // d1 | d2 | ...; empty for the trivial group
    std::vector<QForm> forms;
    std::vector<QForm> generators;
    std::vector<long long> orders;  // order of forms[i]
    bool table_built = false;
};

// D < 0 fundamental, |D| <= cap.
ClassGroupRecord class_group(long long D);

// Exhaustive group-axiom check on the composition table: closure, identity,
// inverses, associativity. Intended for modest h.
bool verify_group_axioms(const ClassGroupRecord& r);

long long ell_torsion(const ClassGroupRecord& r, long long ell);
long long ell_torsion(long long D, long long ell);

// 2^(nu - 1), nu = number of distinct primes dividing |D|.
long long genus_two_torsion(long long D);

std::vector<long long> fundamental_discriminants(long long X);  // -X <= D < 0, ascending

struct TorsionStats {
    BigInt moment;
    long long count = 0;
    long long exceptional = 0;
};

TorsionStats torsion_stats(long long X, long long ell, int k, int threads = 1);

struct CorrespondenceRow {
    long long D = 0;
    long long h = 0;
    long long cubic_fields = 0;
    long long predicted = 0;  // (|Cl[3]| - 1) / 2
};

struct Correspondence {
    std::vector<CorrespondenceRow> rows;
    std::vector<int> heights;
    std::vector<std::size_t> counts;
    bool complete = false;
    bool stable = false;
    bool all_match() const;
};

Correspondence cubic_correspondence(long long X, int threads = 1);

}  // namespace cheb
