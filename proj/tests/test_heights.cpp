#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "cheb/heights.hpp"
#include "cheb/polyparse.hpp"

using namespace cheb;

namespace {

BigPoly big(const std::string& s) { return parse_poly_big(s); }

FieldRecord field(const std::string& f, long long D) {
    FieldRecord r;
    r.poly = parse_poly(f);
    r.degree = r.poly.degree();
    r.disc = D;
    return r;
}

// reverse for 1/alpha, alternate signs for -alpha
BigPoly reversed(BigPoly f) {
    std::reverse(f.begin(), f.end());
    return f;
}
BigPoly negated(BigPoly f) {
    for (std::size_t i = 1; i < f.size(); i += 2) f[i] = -f[i];
    return f;
}

}  // namespace

TEST_CASE("heights of simple numbers") {
    // rational a/b: max(|a|, |b|)
    CHECK(weil_height(big("2x-3")) == doctest::Approx(3.0));
    CHECK(weil_height(big("7x+5")) == doctest::Approx(7.0));
    CHECK(weil_height(big("4x-6")) == doctest::Approx(3.0));  // made primitive first
    // mpmath polyroots
    CHECK(weil_height(big("x^2-x-1")) == doctest::Approx(1.272019649514069).epsilon(1e-10));
    CHECK(weil_height(big("x^3-x-1")) == doctest::Approx(1.098266679872379).epsilon(1e-10));
    CHECK(weil_height(big("x^2-2")) == doctest::Approx(1.414213562373095).epsilon(1e-10));
    CHECK(weil_height(big("3x^3-2x^2-5x+1")) == doctest::Approx(1.740376335546174).epsilon(1e-10));
    CHECK(weil_height(big("2x^4-3")) == doctest::Approx(1.316074012952492).epsilon(1e-10));
    CHECK(weil_height(big("x^5-x-1")) == doctest::Approx(1.071114552743506).epsilon(1e-10));
    CHECK(weil_height(big("x^4+x^3-x^2-x+1")) == doctest::Approx(1.145548736578300).epsilon(1e-10));
    // roots of unity
    CHECK(weil_height(big("x^2+1")) == doctest::Approx(1.0));
    CHECK(weil_height(big("x^2+x+1")) == doctest::Approx(1.0));
    CHECK(weil_height(big("x^4+x^3+x^2+x+1")) == doctest::Approx(1.0));
    CHECK_THROWS_AS(weil_height(big("x^2-1")), ValidationError);
    CHECK_THROWS_AS(weil_height(big("x^6+x+1")), ValidationError);
}

TEST_CASE("height symmetries") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> deg(1, 5), co(-9, 9);
    int done = 0;
    while (done < 150) {
        const int n = deg(rng);
        ZPoly f;
        f.c.resize(static_cast<std::size_t>(n + 1));
        for (auto& v : f.c) v = co(rng);
        if (f.c.back() == 0 || f.c.front() == 0) continue;
        if (!is_irreducible(f)) continue;
        ++done;
        const double h = weil_height(to_big(f));
        CHECK(h >= 1.0);
        CHECK(weil_height(reversed(to_big(f))) == doctest::Approx(h).epsilon(1e-9));
        CHECK(weil_height(negated(to_big(f))) == doctest::Approx(h).epsilon(1e-9));
    }
}

TEST_CASE("charpoly") {
    auto f = parse_poly("x^3-x-1");
    CHECK(charpoly(f, {0, 1, 0}) == to_big(f));
    CHECK(charpoly(f, {2, 0, 0}) == to_big(parse_poly("(x-2)^3")));
    // alpha = 0
    CHECK(charpoly(parse_poly("x^2-5"), {0, 0}) == to_big(parse_poly("x^2")));
    CHECK(charpoly(parse_poly("x^2-x-1"), {-1, 2}) == to_big(parse_poly("x^2-5")));
    CHECK_THROWS_AS(charpoly(parse_poly("2x^2-1"), {0, 1}), ValidationError);
}

TEST_CASE("charpoly against numeric conjugates") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> co(-6, 6);
    for (const char* s : {"x^3-x-1", "x^4-2", "x^5-x-1", "x^4+x^3+2x+5"}) {
        auto f = parse_poly(s);
        std::vector<std::complex<double>> roots;
        {
            // Durand-Kerner roots of f
            const int n = f.degree();
            for (int i = 0; i < n; ++i) roots.push_back(std::polar(1.3, 0.4 + 2 * M_PI * i / n));
            for (int it = 0; it < 2000; ++it)
                for (int i = 0; i < n; ++i) {
                    std::complex<double> num = 0, den = 1;
                    for (int k = n; k >= 0; --k) num = num * roots[i] + static_cast<double>(f[k]);
                    for (int j = 0; j < n; ++j)
                        if (j != i) den *= roots[i] - roots[j];
                    roots[i] -= num / den;
                }
        }
        for (int t = 0; t < 20; ++t) {
            std::vector<long long> a(static_cast<std::size_t>(f.degree()));
            for (auto& v : a) v = co(rng);
            auto cp = charpoly(f, a);
            for (const auto& r : roots) {
                std::complex<double> alpha = 0, p = 1;
                for (auto v : a) {
                    alpha += static_cast<double>(v) * p;
                    p *= r;
                }
                std::complex<double> val = 0;
                double scale = 0;
                for (auto it = cp.rbegin(); it != cp.rend(); ++it) {
                    val = val * alpha + it->convert_to<double>();
                    scale = scale * std::abs(alpha) + std::abs(it->convert_to<double>());
                }
                CHECK(std::abs(val) <= 1e-8 * std::max(1.0, scale));
            }
        }
    }
}

TEST_CASE("bounds") {
    CHECK(silverman_floor(2, 5) == doctest::Approx(1.0573712634405641));
    CHECK(silverman_floor(2, -4) == doctest::Approx(1.0));
    CHECK(thm15_bound(2, 5) == doctest::Approx(2.9907019351));
    CHECK(thm15_bound(3, -23) == doctest::Approx(2 * std::pow(23.0, 1.0 / 6)));
}

TEST_CASE("small generators") {
    auto q5 = small_generator(field("x^2-x-1", 5), 3);
    REQUIRE(q5.found);
    CHECK(q5.H == doctest::Approx(1.272019649514069).epsilon(1e-9));
    CHECK(q5.thm15_ok);
    CHECK(q5.silverman_ok);
    CHECK(q5.floor == doctest::Approx(1.0573712634405641));

    auto qi = small_generator(field("x^2+1", -4), 2);
    REQUIRE(qi.found);
    CHECK(qi.H == doctest::Approx(1.0));
    CHECK(qi.boundary);  // H(i) meets the floor exactly
    CHECK(qi.silverman_ok);

    auto c = small_generator(field("x^3-x-1", -23), 2);
    REQUIRE(c.found);
    CHECK(c.H == doctest::Approx(1.098266679872379).epsilon(1e-9));
    // theta and theta^2 - 1 = 1/theta tie; the lexicographically least wins
    CHECK(c.alpha == std::vector<long long>{-1, 0, 1});
    CHECK(c.thm15_ok);

    CHECK_THROWS_AS(small_generator(field("x-1", 1), 2), ValidationError);
}

TEST_CASE("degree four: proper subfields are skipped") {
    // Q(sqrt2, sqrt3) via x^4 - 10x^2 + 1; theta^2 generates Q(sqrt 6)
    auto r = small_generator(field("x^4-10x^2+1", 2304), 1);
    REQUIRE(r.found);
    CHECK(r.generators < r.candidates);
    CHECK(r.minpoly.size() == 5);
    CHECK(discriminant(r.minpoly) != 0);
}

TEST_CASE("search result does not depend on threads") {
    auto f = field("x^3+x^2-2x-1", 49);
    auto a = small_generator(f, 4, 1), b = small_generator(f, 4, 3);
    CHECK(a.alpha == b.alpha);
    CHECK(a.H == b.H);
    CHECK(a.candidates == b.candidates);
    CHECK(a.generators == b.generators);
}
