#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cheb/fields.hpp"
#include "cheb/polyparse.hpp"

using namespace cheb;

namespace {

bool has_disc(const std::vector<FieldRecord>& v, long long D) {
    return std::any_of(v.begin(), v.end(), [&](const FieldRecord& r) { return r.disc == D; });
}

}  // namespace

TEST_CASE("galois labels") {
    CHECK(galois_label(parse_poly("x^3-x-1")).label == "S3");
    CHECK(galois_label(parse_poly("x^3+x^2-2x-1")).label == "C3");
    CHECK(galois_label(parse_poly("x^4+1")).label == "K4");
    CHECK(galois_label(parse_poly("x^4-4x^2+2")).label == "C4");
    CHECK(galois_label(parse_poly("x^4-2")).label == "D4");
    CHECK(galois_label(parse_poly("x^4+x+1")).label == "S4");
    CHECK(galois_label(parse_poly("x^4+8x+12")).label == "A4");
    CHECK(galois_label(parse_poly("x^5-x-1")).label == "S5");
    auto c5 = galois_label(parse_poly("x^5+x^4-4x^3-3x^2+3x+1"));
    CHECK(c5.label == "other(5)");
    CHECK(c5.heuristic);
    CHECK_FALSE(galois_label(parse_poly("x^5-x-1")).heuristic);
    CHECK(galois_label(parse_poly("x^2+1")).label == "C2");
    CHECK_THROWS_AS(galois_label(parse_poly("x^4-1")), ValidationError);
}

TEST_CASE("record lines round trip") {
    FieldRecord r;
    r.degree = 3;
    r.poly = parse_poly("x^3-x-1");
    r.disc = -23;
    r.r1 = 1;
    r.r2 = 1;
    r.label = "S3";
    r.tags = {"sf-disc"};
    const std::string line = to_record_line(r);
    CHECK(line == "3|-23|1,1|S3|1,0,-1,-1|sf-disc");
    auto back = parse_record_line(line);
    CHECK(back.poly == r.poly);
    CHECK(back.disc == -23);
    CHECK(back.tags == r.tags);
    CHECK_THROWS_AS(parse_record_line("3|-23|1,1"), ValidationError);
}

TEST_CASE("square-free discriminant enumeration") {
    auto cubics = enumerate_squarefree_disc_fields(3, 30, 2);
    CHECK(has_disc(cubics, -23));
    CHECK(enumerate_squarefree_disc_fields(3, 20, 6).empty());
    auto quads = enumerate_squarefree_disc_fields(2, 10, 1);
    for (long long D : {5, -3, -4, 8, -7, -8}) CHECK(has_disc(quads, D));
    CHECK(quads.size() == 6);
    for (const auto& r : cubics) {
        CHECK(r.degree == 3);
        CHECK(r.r1 + 2 * r.r2 == 3);
    }
}

TEST_CASE("square-free cubic records") {
    auto v = enumerate_squarefree_disc_fields(3, 5000, 8);
    REQUIRE(!v.empty());
    for (std::size_t i = 0; i < v.size(); ++i) {
        // quadratic resolvent Q(sqrt D) has the same discriminant
        CHECK(BigInt(fundamental_part(static_cast<long long>(v[i].disc))) == v[i].disc);
        CHECK(v[i].disc == discriminant(v[i].poly));
        for (std::size_t j = i + 1; j < v.size() && v[j].disc == v[i].disc; ++j)
            CHECK_FALSE(same_fingerprint(v[i].poly, v[j].poly, 100));
    }
}

TEST_CASE("enumeration is independent of the thread count") {
    auto a = enumerate_squarefree_disc_fields(3, 2000, 6, 100, 1);
    auto b = enumerate_squarefree_disc_fields(3, 2000, 6, 100, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_record_line(a[i]) == to_record_line(b[i]));
    CHECK(std::is_sorted(a.begin(), a.end(), record_less));
}

TEST_CASE("complete cubic search") {
    auto cs = cubic_fields_by_disc(-200, 200);
    CHECK(cs.complete);
    std::vector<long long> D;
    for (const auto& r : cs.fields) D.push_back(static_cast<long long>(r.disc));
    std::sort(D.begin(), D.end());
    // sympy round_two over a coefficient box
    CHECK(D == std::vector<long long>{-200, -199, -175, -172, -152, -140, -139, -135, -116, -108, -107, -104, -87, -83, -76,
                                      -59, -44, -31, -23, 49, 81, 148, 169});
}

TEST_CASE("cyclic cubic fields") {
    auto r = cyclic_fields(3, 8000);
    auto find = [&](long long f) -> const ConductorRow* {
        for (const auto& c : r.conductors)
            if (c.conductor == f) return &c;
        return nullptr;
    };
    REQUIRE(find(7));
    CHECK(find(7)->constructed == 1);
    REQUIRE(find(9));
    CHECK(find(9)->constructed == 1);
    CHECK(find(9)->wild);
    REQUIRE(find(91) == nullptr);  // 91^2 > 8000
    CHECK(has_disc(r.fields, 49));
    CHECK(has_disc(r.fields, 81));
    for (const auto& f : r.fields) {
        CHECK(f.disc == BigInt(f.conductor) * f.conductor);
        CHECK(galois_label(f.poly).label == "C3");
    }
    auto big = cyclic_fields(3, 8281);
    bool seen = false;
    for (const auto& c : big.conductors)
        if (c.conductor == 91) {
            seen = true;
            CHECK(c.constructed == 2);
            CHECK(c.euler_coefficient == 4);
            CHECK(c.ratio == 2);
        }
    CHECK(seen);
    CHECK(gaussian_period_poly(3, 7, {1}) == parse_poly("x^3+x^2-2x-1"));
}

TEST_CASE("cyclic degree 5 and 7") {
    auto r5 = cyclic_fields(5, 1e9);
    CHECK(has_disc(r5.fields, 14641));  // 11^4
    for (const auto& f : r5.fields) CHECK(is_square(discriminant(f.poly)));
    auto r7 = cyclic_fields(7, 1e12);
    for (const auto& f : r7.fields) CHECK(f.disc == boost::multiprecision::pow(BigInt(f.conductor), 6));
}

TEST_CASE("census") {
    auto r = cyclic_fields(3, 1e6);
    auto rep = family_census(r.fields, geometric_grid(49, 1e6, 20));
    CHECK(rep.exponent == doctest::Approx(0.5).epsilon(0.2));
    CHECK(rep.histogram.size() >= 2);
    CHECK(rep.max_multiplicity == 4);  // conductor 819 = 9 * 7 * 13
    CHECK_THROWS_AS(family_census({}, geometric_grid(1, 10, 3)), FitError);
    CHECK(restricted_disc(BigInt(8281), {7}) == 169);
}

TEST_CASE("geometric grid") {
    auto g = geometric_grid(1, 1000, 4);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == doctest::Approx(1));
    CHECK(g[1] == doctest::Approx(10));
    CHECK(g[3] == doctest::Approx(1000));
}

TEST_CASE("fundamental part") {
    CHECK(fundamental_part(-23) == -23);
    CHECK(fundamental_part(-108) == -3);
    CHECK(fundamental_part(2048) == 8);
    CHECK(fundamental_part(12) == 12);
    CHECK(fundamental_part(-4) == -4);
}
