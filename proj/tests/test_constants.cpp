#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cheb/constants.hpp"

using namespace cheb;

namespace {

Rational R(long long a, long long b = 1) { return Rational(a, b); }

}  // namespace

TEST_CASE("delta for the S3 configuration") {
    CHECK(delta_of(R(1, 10), 2, 6, 1) == Rational(1, 324));  // 0.1 / 32.4
    CHECK(to_double(delta_of(R(1, 10), 2, 6, 1)) == doctest::Approx(3.0864197530864e-3));
    CHECK(delta_of(R(1, 100), 2, 6, 1) < delta_of(R(1, 10), 2, 6, 1));
    CHECK(delta_of(R(1, 10), 2, 12, 1) < delta_of(R(1, 10), 2, 6, 1));
    CHECK_THROWS_AS(delta_of(0, 2, 6, 1), ValidationError);
}

TEST_CASE("budget arithmetic") {
    auto b = km_budget(2, 3, 1, R(1, 3), R(1, 10), R(1, 20));
    CHECK(km_budget(2, 3, 1, 0, R(1, 10), R(1, 20)).c0pp == 16);
    CHECK(b.c0pp == 16);
    CHECK(b.gap == R(1, 20));
    CHECK(b.Delta == R(37, 60));
    CHECK(b.alpha == R(323, 324));
    CHECK(b.delta == R(1, 324));
    CHECK(b.km_exponent == R(497, 1200));                // 1 - (19/20)(37/60)
    CHECK(b.exceptional_exponent == R(13, 30));          // tau + eps0
    CHECK(b.km_exponent <= b.exceptional_exponent);
    CHECK_THROWS_AS(km_budget(2, 3, 1, 1, R(1, 10), R(1, 20)), ValidationError);
}

TEST_CASE("delta identity on random configurations") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> mdist(1, 6), gdist(1, 60), num(1, 40);
    int tried = 0;
    while (tried < 100) {
        long long m = mdist(rng), G = 2 * gdist(rng);
        Rational d = R(num(rng), 10), tau = d * R(num(rng) - 1, 41);
        Rational eps0 = std::min<Rational>(R(1, 2), d / 4) * R(num(rng), 40);
        Rational eta = eps0 / (2 * d);
        if (!(eta < R(1, 4))) continue;
        if (1 - tau / d - eps0 / (2 * d) <= 0) continue;
        ++tried;
        auto b = km_budget(m, R(G, 2), d, tau, eps0, eta);
        // closed form eps0 / (5 m |G|/2 + 2d + 4 eps0)
        Rational closed = eps0 / (R(5 * m * G, 2) + 2 * d + 4 * eps0);
        CHECK(b.delta == closed);
        CHECK(delta_of(eps0, m, G, d) == closed);
        CHECK(b.gap == eps0 / 2);
        CHECK(b.km_exponent <= b.exceptional_exponent);
    }
}

TEST_CASE("presets") {
    for (const auto& n : preset_names()) {
        auto cfg = preset(n);
        CHECK_NOTHROW(cfg.validate());
        auto rep = constants_report(cfg);
        CHECK(rep.usable);
        CHECK(rep.delta == rep.budget.delta);
    }
    CHECK_THROWS_AS(preset("s7"), ValidationError);
    auto bad = preset("s3");
    bad.A = 1;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("Chebotarev parameters") {
    auto cfg = preset("s3");
    const double d = to_double(delta_of(cfg.eps0, cfg.m, cfg.G, cfg.d));
    auto p = cheb_params(cfg, d, d);
    CHECK(p.c0 == doctest::Approx(1.0 / 40));
    CHECK(p.c1 == doctest::Approx(1.0 / 480));
    CHECK(p.nu2 == doctest::Approx(std::max(4 / d, 8 / cfg.cQ / d) + 4));
    // nu3 is linear in n_L and scales as delta^(-1/A)
    auto cfg2 = cfg;
    cfg2.G = 12;
    cfg2.C_size = 1;
    CHECK(cheb_params(cfg2, d, d).nu3 / p.nu3 == doctest::Approx(2.0));
    CHECK(cheb_params(cfg, d / 4, d / 4).nu3 / p.nu3 == doctest::Approx(2.0));
    // x0 nondecreasing in D_L
    double prev = -1e300;
    for (double mu = 0; mu < 40; mu += 0.5) {
        double v = log_x0(p, mu);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_NOTHROW(cheb_params(cfg, 0.25, 0.25));  // delta = 1/(2A) admitted
    CHECK_THROWS_AS(cheb_params(cfg, 0.26, 0.1), ValidationError);
    CHECK_THROWS_AS(cheb_params(cfg, 0.1, 0.2), ValidationError);
}

TEST_CASE("thresholds") {
    auto cfg = preset("s3");
    const double d = 0.1 / 32.4;
    auto t = thresholds(cfg, d, d);
    CHECK(t.D0p == doctest::Approx(2 / d * std::exp(cfg.cQ / d)));
    CHECK(t.D1 == doctest::Approx(std::log(1 / (4 * d))));
    CHECK(thresholds(cfg, 0.2, 0.2).D1 == doctest::Approx(std::log(std::log(4.0))));
    CHECK(t.D2 == doctest::Approx(std::max({t.E1a, t.E1b, t.E2b})));
    // D0' and D1 grow as delta shrinks
    double prev0 = 0, prev1 = 0;
    for (double s : {0.3, 0.1, 0.03, 0.01, 0.003}) {
        auto u = thresholds(cfg, s, s);
        CHECK(u.D0p >= prev0);
        CHECK(u.D1 >= prev1);
        prev0 = u.D0p;
        prev1 = u.D1;
    }
    CHECK_THROWS_AS(thresholds(cfg, 0.4, 0.4), ValidationError);
    CHECK(log10_from_mu(std::log(std::log(1e6))) == doctest::Approx(6.0));
}

TEST_CASE("closed-form bounds") {
    CHECK(bound_eval("thmD", {{"n", 3}, {"l", 3}, {"D", 1e6}}) == doctest::Approx(std::pow(10.0, 2.5)));
    CHECK(bound_eval("silverman", {{"n", 2}, {"D", 5}}) == doctest::Approx(1.0573712634405641));
    CHECK(bound_eval("thm15", {{"n", 2}, {"D", 5}}) == doctest::Approx(2 * std::pow(5.0, 0.25)));
    // M equal to the D^delta/log(D^delta) budget: substituting gives D^(1/2 - delta) log(D^delta)
    const double D = 1e8, dl = 1.0 / 12;
    const double M = std::pow(D, dl) / std::log(std::pow(D, dl));
    CHECK(bound_eval("mprimes", {{"D", D}, {"M", M}}) == doctest::Approx(std::pow(D, 0.5 - dl) * dl * std::log(D)));
    CHECK_THROWS_AS(bound_eval("thmD", {{"n", 3}}), ValidationError);
    CHECK_THROWS_AS(bound_eval("nope", {}), ValidationError);
}

TEST_CASE("envelope audit") {
    for (const auto& n : preset_names()) {
        auto cfg = preset(n);
        const double d = to_double(delta_of(cfg.eps0, cfg.m, cfg.G, cfg.d));
        auto r = envelope_audit(cfg, d, d, 300, 5, 2);
        CHECK_MESSAGE(r.passed(), n);
        CHECK(r.samples == 300);
    }
}

TEST_CASE("audit flags a point below the x range") {
    auto cfg = preset("s3");
    const double d = to_double(delta_of(cfg.eps0, cfg.m, cfg.G, cfg.d));
    auto p = cheb_params(cfg, d, d);
    const double mu = thresholds(cfg, d, d).max() + 1;
    const double lam = std::log(std::log(2.0) + 1);  // far below x0
    auto checks = audit_point(cfg, p, mu, lam);
    bool some_failed = false;
    for (const auto& c : checks) some_failed = some_failed || !c.ok;
    CHECK(some_failed);
    const double lam_ok = std::log(log_x0(p, mu)) + 0.5;
    for (const auto& c : audit_point(cfg, p, mu, lam_ok)) CHECK_MESSAGE(c.ok, c.name);
}

TEST_CASE("report text") {
    auto s = to_text(constants_report(preset("s3")));
    CHECK(s.rfind("key,value\n", 0) == 0);
    CHECK(s.find("delta,1/324") != std::string::npos);
}
