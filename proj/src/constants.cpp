#include "cheb/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "cheb/frobenius.hpp"

namespace cheb {

void FamilyConfig::validate() const {
    auto need = [](bool ok, const std::string& what) {
        if (!ok) throw ValidationError("config: " + what);
    };
    need(n >= 2, "n >= 2");
    need(G >= 1 && m >= 1, "|G| and m positive");
    need(d > 0, "d > 0");
    need(tau >= 0 && tau < d, "0 <= tau < d");
    need(eps0 > 0 && eps0 <= Rational(1, 2) && eps0 <= d / 4, "0 < eps0 <= min(1/2, d/4)");
    need(A >= 2, "A >= 2");
    need(n_k >= 1 && D_k >= 1 && c_k > 0, "base field data");
    need(C0 > 0 && C1 > 0 && C2 > 0 && C5 > 0 && C6 > 0 && cQ > 0, "constants must be positive");
    need(C_size >= 1 && C_size <= G, "1 <= |C| <= |G|");
}

std::vector<std::string> preset_names() { return {"s3", "s4", "c3", "d5", "a4"}; }

FamilyConfig preset(const std::string& name) {
    FamilyConfig c;
    c.name = name;
    auto set = [&](int n, long long m, long long G, Rational d, Rational tau, Rational beta) {
        c.n = n;
        c.m = m;
        c.G = G;
        c.d = d;
        c.tau = tau;
        c.beta = beta;
        c.eps0 = std::min<Rational>(Rational(1, 10), d / 4);
    };
    if (name == "s3")
        set(3, 2, 6, 1, Rational(1, 3), 1);
    else if (name == "s4")
        set(4, 3, 24, 1, Rational(1, 2), 1);
    else if (name == "c3")
        set(3, 1, 3, Rational(1, 2), 0, Rational(1, 2));
    else if (name == "d5")
        set(5, 2, 10, Rational(7, 10), Rational(1, 4), Rational(1, 2));
    else if (name == "a4")
        set(4, 3, 12, Rational(5, 6), parse_rational("0.2784"), Rational(1, 2));
    else
        throw ValidationError("unknown preset '" + name + "'");
    return c;
}

Rational delta_of(const Rational& eps0, const Rational& m, const Rational& G, const Rational& d) {
    if (eps0 <= 0 || m <= 0 || G <= 0 || d <= 0) throw ValidationError("delta_of: inputs must be positive");
    return eps0 / (5 * m * G / 2 + 2 * d + 4 * eps0);
}

KMBudget km_budget(const Rational& m, const Rational& A, const Rational& d, const Rational& tau, const Rational& eps0,
                   const Rational& eta) {
    if (!(tau < d)) throw ValidationError("budget infeasible: tau >= d");
    if (eps0 <= 0) throw ValidationError("eps0 must be positive");
    if (!(eta > 0 && eta < Rational(1, 4))) throw ValidationError("eta must lie in (0, 1/4)");
    KMBudget b;
    b.c0pp = 5 * m * A / 2 + d;
    b.eps1 = b.eps2 = eps0;
    b.c0 = b.c0pp + b.eps1;
    b.Delta = 1 - tau / d - b.eps2 / (2 * d);
    if (b.Delta <= 0) throw ValidationError("budget infeasible: Delta <= 0");
    b.gap = (1 - b.Delta) * d - tau;
    b.eta = eta;
    if (b.c0 < 2 * b.gap) throw std::logic_error("alpha < 3/4");
    b.alpha = (b.c0 + b.gap) / (b.c0 + 2 * b.gap);
    b.delta = 1 - b.alpha;
    b.km_exponent = (1 - (1 - eta) * b.Delta) * d;
    b.exceptional_exponent = tau + eps0;
    return b;
}

namespace {

double ipow(double b, long long e) { return std::pow(b, static_cast<double>(e)); }

// Solve (log(t+2))^(2/3) (log log(t+3))^(1/3) = K for log t.
double solve_T0_Q(double K) {
    auto h = [](double u) {  // u = log(t + 2)
        double l3 = u + std::log1p(std::exp(-u));  // log(t + 3)
        return std::pow(u, 2.0 / 3) * std::cbrt(std::log(l3));
    };
    double lo = std::log(3.0), hi = 1;
    if (h(lo) >= K) return 0;
    while (h(hi) < K) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        (h(mid) < K ? lo : hi) = mid;
    }
    double u = (lo + hi) / 2;
    return u > 30 ? u : std::log(std::exp(u) - 2);
}

}  // namespace

ChebParams cheb_params(const FamilyConfig& cfg, double delta, double delta0) {
    cfg.validate();
    const double A = static_cast<double>(cfg.A);
    if (!(delta > 0) || delta > 1 / (2 * A)) throw ValidationError("delta must satisfy 0 < delta <= 1/(2A)");
    if (!(delta0 > 0) || delta0 > delta) throw ValidationError("delta0 must satisfy 0 < delta0 <= delta");
    ChebParams p;
    p.delta = delta;
    p.delta0 = delta0;
    p.A = cfg.A;
    p.G = cfg.G;
    p.n_L = cfg.n_L();
    p.n_k = cfg.n_k;
    p.k_rational = cfg.k_rational;
    p.cQ = cfg.cQ;
    p.c_k = cfg.c_k;
    p.D_k = cfg.k_rational ? 1 : cfg.D_k;
    p.c0 = 1 / (ipow(2, cfg.A + 3) + 8);
    p.c1 = p.c0 / (12 * cfg.C5 * cfg.C6);
    p.c1p = p.c0 / (12 * cfg.C5);
    const double G = static_cast<double>(cfg.G), nL = static_cast<double>(p.n_L);
    p.log_nu1 = -std::log(p.c0) + std::log(6 / p.c1 * G * ipow(10, cfg.A - 1) * ipow(nL, cfg.A)) / delta0 -
                2 / delta0 * std::log(delta);
    if (cfg.k_rational)
        p.nu2 = std::max(2 * A / delta0, 4 * A / cfg.cQ / delta) + 2 * A;
    else
        p.nu2 = std::max(2 * A / delta0, 4 * A * ipow(static_cast<double>(cfg.n_k), 3) / cfg.c_k / delta) + 2 * A;
    p.nu3 = 6 * std::pow(p.c1p, -1 / (2 * A + 1)) * std::pow(p.c1, -1 / (2 * A)) * p.D_k * nL * std::pow(delta, -1 / A);
    if (cfg.k_rational) {
        p.log_T0 = solve_T0_Q(cfg.cQ / delta0);
    } else {
        const double nk = static_cast<double>(cfg.n_k);
        double logv = -std::log(cfg.D_k) / nk + cfg.c_k / (delta0 * nk * nk * nk);
        p.log_T0 = logv > 30 ? logv : std::log(std::max(1.0, std::exp(logv) - 3));
    }
    return p;
}

double log_x0(const ChebParams& p, double mu) {
    const double v = std::log(p.nu3) + mu;
    if (p.k_rational) {
        const double c = std::cbrt(v);
        return p.log_nu1 + p.nu2 * c * c * c * c * c * std::cbrt(std::log(std::log(2.0) + mu));
    }
    return p.log_nu1 + p.nu2 * v * v;
}

double Thresholds::max() const { return std::max({D0p, D1, D1p, D2}); }

double log10_from_mu(double mu) { return std::exp(mu) / std::log(10.0); }

Thresholds thresholds(const FamilyConfig& cfg, double delta, double delta0) {
    cfg.validate();
    const double A = static_cast<double>(cfg.A);
    if (!(delta > 0) || !(delta0 > 0) || delta0 > delta) throw ValidationError("need 0 < delta0 <= delta");
    if (delta >= 2 / (2 * A + 1)) throw ValidationError("infeasible: delta >= 2/(2A+1)");
    if (delta >= 1 / (A + 1)) throw ValidationError("infeasible: delta >= 1/(A+1) leaves no D2 for the E2b term");
    Thresholds t;
    const double G = static_cast<double>(cfg.G), nL = static_cast<double>(cfg.n_L());
    const double c0 = 1 / (ipow(2, cfg.A + 3) + 8);
    const double c1p = c0 / (12 * cfg.C5);
    // k = Q: log log D0' = (2/delta) exp(c_Q/delta); otherwise D0' = exp(exp c_k)
    t.D0p = cfg.k_rational ? 2 / delta * std::exp(cfg.cQ / delta) : cfg.c_k;
    t.D1 = std::log(std::max(std::log(4.0), 1 / (4 * delta0)));
    {
        // D >= c2 (log D)^k with c2 from the large-x verification; largest root in L = log D.
        const double c1 = static_cast<double>(cfg.C_size) / (G * cfg.C1);
        const double k = 2 * A / (cfg.C2 * std::sqrt(10.0));
        const double log_c2 = k * (-std::log(c1) / (2 * A) + 0.5 * std::log(10 * nL));
        double L = std::abs(log_c2) + 1000 * k + 10;
        for (int i = 0; i < 500; ++i) L = std::max(1.0, log_c2 + k * std::log(L));
        t.D1p = std::log(L);
    }
    t.E1a = std::log(G * ipow(10 * nL, cfg.A) / c1p) / (2 / delta - 2 * A - 1);
    t.E1b = std::log(2 / delta * ipow(10, cfg.A) * ipow(nL, cfg.A + 1) * G / c1p) / (2 / delta - 2 * A - 1);
    t.E2b = std::log(ipow(10, cfg.A + 1) * ipow(nL, cfg.A + 2) * G / c1p) / (2 / delta - 2 * A - 2);
    t.D2 = std::max({t.E1a, t.E1b, t.E2b});
    return t;
}

double bound_eval(const std::string& kind, const std::map<std::string, double>& args) {
    auto get = [&](const std::string& k) {
        auto it = args.find(k);
        if (it == args.end()) throw ValidationError("bound " + kind + ": missing argument " + k);
        return it->second;
    };
    auto opt = [&](const std::string& k, double def) {
        auto it = args.find(k);
        return it == args.end() ? def : it->second;
    };
    auto pos = [&](const std::string& k) {
        double v = get(k);
        if (!(v > 0)) throw ValidationError("bound " + kind + ": " + k + " must be positive");
        return v;
    };
    if (kind == "thmA") {
        double x = get("x");
        if (x < 2) throw ValidationError("thmA needs x >= 2");
        return opt("C0", 1) * pos("C") / pos("G") * std::sqrt(x) * (std::log(pos("D_L")) + pos("n_L") * std::log(x));
    }
    if (kind == "thmB") {
        double x = get("x");
        if (x < 2) throw ValidationError("thmB needs x >= 2");
        double out = opt("C1", 1) * x * std::exp(-opt("C2", 1) / std::sqrt(pos("n_L")) * std::sqrt(std::log(x)));
        auto b = args.find("beta0");
        if (b != args.end()) {
            if (!(b->second > 0 && b->second < 1)) throw ValidationError("thmB: beta0 must lie in (0,1)");
            double xb = std::pow(x, b->second);
            if (xb > 2) out += pos("C") / pos("G") * static_cast<double>(li(xb));
        }
        return out;
    }
    if (kind == "thmD") {
        double n = get("n"), l = get("l");
        if (n < 2 || l < 1) throw ValidationError("thmD needs n >= 2, l >= 1");
        return std::pow(pos("D"), 0.5 - 1 / (2 * l * (n - 1)) + opt("eps", 0));
    }
    if (kind == "mprimes") return std::pow(pos("D"), 0.5 + opt("eps", 0)) / pos("M");
    if (kind == "silverman") {
        double n = get("n");
        if (n < 2) throw ValidationError("silverman needs n >= 2");
        return std::pow(n, -1 / (2 * (n - 1))) * std::pow(pos("D"), 1 / (2 * n * (n - 1)));
    }
    if (kind == "thm15") {
        double n = get("n");
        if (n < 2) throw ValidationError("thm15 needs n >= 2");
        return 2 * std::pow(pos("D"), 1 / (2 * n));
    }
    throw ValidationError("unknown bound kind '" + kind + "'");
}

std::vector<CheckResult> audit_point(const FamilyConfig& cfg, const ChebParams& p, double mu, double lambda) {
    const double A = static_cast<double>(p.A), d = p.delta, d0 = p.delta0;
    const double G = static_cast<double>(p.G), nL = static_cast<double>(p.n_L), C = static_cast<double>(cfg.C_size);
    const double lx = std::exp(lambda);                // log x
    const double lT = 2 / d * mu;                       // log T
    const double lDT = mu + std::log1p(nL * lT * std::exp(-mu));  // log log(D_L T^n_L)
    const double rhs_p = std::log(p.c1p) - std::log(G / C) - (A - 1) * lambda;
    const double rhs_s = std::log(p.c1) - std::log(G / C) - (A - 1) * lambda;
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, double lhs, double rhs) {
        double slack = 1e-12 * std::max({1.0, std::abs(std::isfinite(lhs) ? lhs : 0), std::abs(rhs)});
        out.push_back({name, lhs, rhs, lhs <= rhs + slack});
    };
    // E-terms, each divided by x
    add("E1a", -lT + lambda + mu, rhs_p);
    add("E1b", mu - lx, rhs_p);
    add("E1c", std::log(nL) + lambda - lx, rhs_p);
    add("E1d", std::log(nL) - lT + lambda + std::log(lT), rhs_p);
    add("E2a", lambda + mu - lx, rhs_p);
    add("E2b", std::log(nL) - lT + 2 * lambda, rhs_p);
    add("E3", -lx / 2 + std::log(nL) + 2 * mu, rhs_s);
    add("E4", -d0 * lx + std::log(lT) + lDT, rhs_s);
    double Lt;
    if (p.k_rational) {
        double l2 = lT > 30 ? lT : std::log(std::exp(lT) + 2);
        double l3 = lT > 30 ? lT : std::log(std::exp(lT) + 3);
        Lt = p.cQ / (std::pow(l2, 2.0 / 3) * std::cbrt(std::log(l3)));
    } else {
        const double nk = static_cast<double>(p.n_k);
        double l3 = lT > 30 ? lT : std::log(std::exp(lT) + 3);
        Lt = p.c_k / (nk * nk * (std::log(p.D_k) + nk * l3));
    }
    add("E5", -Lt * lx + std::log(lT) + lDT, rhs_s);

    // x lower bounds, compared as log log x
    auto xb = [&](const std::string& name, double log_bound) {
        add(name, log_bound > 0 ? std::log(log_bound) : -std::numeric_limits<double>::infinity(), lambda);
    };
    xb("x1", std::log(G * ipow(10 * nL, p.A - 1) / p.c1p) + (2 * A - 1) * mu);
    xb("x2", std::log(G * ipow(10, p.A) * ipow(nL, p.A + 1) / p.c1p) + 2 * A * mu);
    xb("x3", std::log(G * ipow(10, p.A) * ipow(nL, p.A) / p.c1p) + (2 * A + 1) * mu);
    xb("SxT_E3a", std::log(G * G * ipow(10, 2 * (p.A - 1)) * ipow(nL, 2 * p.A) / (p.c1 * p.c1)) + 4 * A * mu);
    xb("SxT_E4", std::log(6 * G * ipow(10, p.A - 1) * ipow(nL, p.A) / p.c1) / d0 - 2 / d0 * std::log(d) + 2 * A / d0 * mu);
    const double c2 = 6 / p.c1 * ipow(10, p.A - 1) * ipow(nL, p.A) * G;
    if (p.k_rational) {
        const double c6 = 4 * A / p.cQ * std::pow(d, -2.0 / 3) * std::cbrt(std::log(2 / d) + 1);
        const double mm = std::max(std::pow(2.0, d / 2), std::pow(c2, 1 / (2 * A)) * std::pow(d, -1 / A));
        const double v = std::cbrt(std::log(mm) + mu);
        xb("SxT_E5aQ", c6 * v * v * v * v * v * std::cbrt(std::log(d / 2 * std::log(2.0) + mu)));
    } else {
        const double nk = static_cast<double>(p.n_k);
        xb("SxT_E5a", 4 * A / p.c_k / d * nk * nk * nk * (d / 2 * std::log(2.0) + d / (2 * nk) * std::log(p.D_k) + mu) *
                          (std::log(std::pow(c2, 1 / (2 * A)) * std::pow(d, -1 / A)) + mu));
    }
    return out;
}

AuditReport envelope_audit(const FamilyConfig& cfg, double delta, double delta0, std::size_t n_samples,
                           std::uint64_t seed, int threads) {
    const ChebParams p = cheb_params(cfg, delta, delta0);
    const Thresholds t = thresholds(cfg, delta, delta0);
    AuditReport rep;
    const double mu_star = t.max();
    if (!std::isfinite(mu_star)) {
        rep.skipped = true;
        return rep;
    }
    struct Sample {
        double mu, lambda;
        bool empty;
    };
    std::vector<Sample> samples;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    auto lam_range = [&](double mu) {
        double lo = std::log(std::max(log_x0(p, mu), std::log(2.0)));
        double hi = std::log(10 * static_cast<double>(p.n_L)) + 2 * mu;
        return std::make_pair(lo, hi);
    };
    for (std::size_t i = 0; i < n_samples; ++i) {
        double mu = mu_star;
        double u2 = 0;
        if (i == 1) u2 = 1;
        if (i >= 2) {
            mu = mu_star + U(rng) * std::max(10.0, mu_star);
            u2 = U(rng);
        }
        auto [lo, hi] = lam_range(mu);
        if (!(lo <= hi)) {
            samples.push_back({mu, 0, true});
            continue;
        }
        samples.push_back({mu, lo + u2 * (hi - lo), false});
    }
    std::vector<std::vector<CheckResult>> res(samples.size());
    const std::size_t T = static_cast<std::size_t>(std::max(1, threads));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < T; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < samples.size(); i += T)
                if (!samples[i].empty) res[i] = audit_point(cfg, p, samples[i].mu, samples[i].lambda);
        });
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].empty) {
            ++rep.empty;
            continue;
        }
        ++rep.samples;
        for (const auto& c : res[i]) {
            if (c.ok) continue;
            ++rep.failures[c.name];
            if (rep.violations.size() < 10)
                rep.violations.push_back(c.name + " at loglogD=" + fmt_double(samples[i].mu, 10) +
                                         " logloglx=" + fmt_double(samples[i].lambda, 10) + ": " + fmt_double(c.lhs, 10) +
                                         " > " + fmt_double(c.rhs, 10));
        }
    }
    if (rep.samples == 0) rep.skipped = true;
    return rep;
}

ConstantsReport constants_report(const FamilyConfig& cfg) {
    cfg.validate();
    ConstantsReport r;
    r.cfg = cfg;
    r.delta = delta_of(cfg.eps0, cfg.m, cfg.G, cfg.d);
    r.budget = km_budget(cfg.m, Rational(cfg.G, 2), cfg.d, cfg.tau, cfg.eps0, cfg.eps0 / (2 * cfg.d));
    const double dl = to_double(r.delta);
    r.usable = r.delta <= Rational(1, 4) && r.delta <= Rational(1, 2 * cfg.A);
    if (r.usable) {
        r.params = cheb_params(cfg, dl, dl);
        r.thr = thresholds(cfg, dl, dl);
    }
    return r;
}

std::string to_text(const ConstantsReport& r) {
    std::ostringstream os;
    auto kv = [&](const std::string& k, const std::string& v) { os << k << "," << v << "\n"; };
    auto num = [&](double v) { return fmt_double(v, 12); };
    const auto& c = r.cfg;
    kv("key", "value");
    kv("preset", c.name);
    kv("n", std::to_string(c.n));
    kv("G", std::to_string(c.G));
    kv("m", std::to_string(c.m));
    kv("d", to_string(c.d));
    kv("tau", to_string(c.tau));
    kv("beta", to_string(c.beta));
    kv("eps0", to_string(c.eps0));
    kv("A", std::to_string(c.A));
    kv("C0", num(c.C0));
    kv("C1", num(c.C1));
    kv("C2", num(c.C2));
    kv("C5", num(c.C5));
    kv("C6", num(c.C6));
    kv("cQ", num(c.cQ));
    kv("delta", to_string(r.delta));
    kv("delta_decimal", num(to_double(r.delta)));
    kv("km_c0pp", to_string(r.budget.c0pp));
    kv("km_c0", to_string(r.budget.c0));
    kv("km_Delta", to_string(r.budget.Delta));
    kv("km_eta", to_string(r.budget.eta));
    kv("km_alpha", to_string(r.budget.alpha));
    kv("km_delta", to_string(r.budget.delta));
    kv("km_exponent", num(to_double(r.budget.km_exponent)));
    kv("exceptional_exponent", num(to_double(r.budget.exceptional_exponent)));
    kv("usable", r.usable ? "true" : "false");
    if (r.usable) {
        kv("c0", num(r.params.c0));
        kv("c1", num(r.params.c1));
        kv("c1p", num(r.params.c1p));
        kv("log_nu1", num(r.params.log_nu1));
        kv("nu2", num(r.params.nu2));
        kv("nu3", num(r.params.nu3));
        kv("log_T0", num(r.params.log_T0));
        kv("loglog_D0p", num(r.thr.D0p));
        kv("loglog_D1", num(r.thr.D1));
        kv("loglog_D1p", num(r.thr.D1p));
        kv("loglog_D2", num(r.thr.D2));
        kv("log10_D1", num(log10_from_mu(r.thr.D1)));
        kv("log10_D1p", num(log10_from_mu(r.thr.D1p)));
        kv("log10_D2", num(log10_from_mu(r.thr.D2)));
    }
    return os.str();
}

}  // namespace cheb
