#pragma once

#include <map>
#include <string>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

// Family parameters plus the absolute-constant placeholders. The placeholders are
// not known numerically; defaults are 1.0 and c_Q = 1/57.54.
struct FamilyConfig {
    std::string name;
    int n = 0;            // degree
    long long G = 0;      // |G|
    long long m = 0;      // max irreducible representation dimension
    Rational d, tau, beta, eps0;
    long long A = 2;      // Chebotarev log-power, A >= 2
    // base field; k = Q unless k_rational is false
    bool k_rational = true;
    long long n_k = 1;
    double D_k = 1, c_k = 1;
    double C0 = 1, C1 = 1, C2 = 1, C5 = 1, C6 = 1;
    double cQ = 1 / 57.54;
    long long C_size = 1;  // |C| used where a class size enters; 1 is the worst case

    long long n_L() const { return G * n_k; }
    void validate() const;
};

std::vector<std::string> preset_names();  // s3 s4 c3 d5 a4
FamilyConfig preset(const std::string& name);

Rational delta_of(const Rational& eps0, const Rational& m, const Rational& G, const Rational& d);

struct KMBudget {
    Rational c0pp;   // 5 m A / 2 + d
    Rational eps1, eps2;
    Rational c0;     // c0pp + eps1
    Rational Delta;  // 1 - tau/d - eps2/(2d)
    Rational gap;    // (1 - Delta) d - tau
    Rational eta;
    Rational alpha, delta;
    Rational km_exponent;           // (1 - (1 - eta) Delta) d
    Rational exceptional_exponent;  // tau + eps0
};

// A is the conductor exponent here (|G|/2 for the Dedekind families).
KMBudget km_budget(const Rational& m, const Rational& A, const Rational& d, const Rational& tau, const Rational& eps0,
                   const Rational& eta);

struct ChebParams {
    double delta = 0, delta0 = 0;
    double c0 = 0;   // (2^(A+3) + 8)^-1
    double c1 = 0;   // c0 / (12 C5 C6), as in the final parameter display
    double c1p = 0;  // c0 / (12 C5)
    double log_nu1 = 0, nu2 = 0, nu3 = 0;
    double log_T0 = 0;
    bool k_rational = true;
    long long A = 2, G = 0, n_L = 0, n_k = 1;
    double cQ = 0, c_k = 0, D_k = 1;
};

ChebParams cheb_params(const FamilyConfig& cfg, double delta, double delta0);

// log x0 as a function of mu = log log D_L.
double log_x0(const ChebParams& p, double mu);

// Each threshold is carried as mu = log log D.
struct Thresholds {
    double D0p = 0, D1 = 0, D1p = 0, D2 = 0;
    double E1a = 0, E1b = 0, E2b = 0;  // D2 is their max
    double max() const;
};

Thresholds thresholds(const FamilyConfig& cfg, double delta, double delta0);

// log10 D from mu; inf when it overflows.
double log10_from_mu(double mu);

// kinds: thmA thmB thmD mprimes silverman thm15
double bound_eval(const std::string& kind, const std::map<std::string, double>& args);

struct CheckResult {
    std::string name;
    double lhs = 0, rhs = 0;  // log-scale, pass iff lhs <= rhs (1e-12 relative slack)
    bool ok = false;
};

// Nine E-term checks against c x (log x)^-(A-1), then the six x lower bounds
// (x1 x2 x3 SxT_E3a SxT_E4 SxT_E5aQ/SxT_E5a).
std::vector<CheckResult> audit_point(const FamilyConfig& cfg, const ChebParams& p, double mu, double lambda);

struct AuditReport {
    bool skipped = false;
    std::size_t samples = 0;
    std::size_t empty = 0;  // samples whose x-range was empty
    std::map<std::string, std::size_t> failures;
    std::vector<std::string> violations;  // first few, human readable
    bool passed() const { return !skipped && failures.empty(); }
};

AuditReport envelope_audit(const FamilyConfig& cfg, double delta, double delta0, std::size_t n_samples,
                           std::uint64_t seed = 1, int threads = 1);

struct ConstantsReport {
    FamilyConfig cfg;
    Rational delta;
    KMBudget budget;
    ChebParams params;
    Thresholds thr;
    bool usable = false;  // delta <= 1/4 and delta <= 1/(2A)
};

ConstantsReport constants_report(const FamilyConfig& cfg);

// key,value lines
std::string to_text(const ConstantsReport& r);

}  // namespace cheb
