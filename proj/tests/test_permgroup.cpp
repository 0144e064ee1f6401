#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cheb/permgroup.hpp"

using namespace cheb;

namespace {

// Independent oracle: naive fixed-point closure over all pairwise products.
std::set<std::vector<int>> naive_closure(int n, const std::vector<Perm>& gens) {
    std::set<std::vector<int>> s{Perm::identity(n).images};
    for (const auto& g : gens) s.insert(g.images);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(s.begin(), s.end());
        for (const auto& a : cur)
            for (const auto& b : cur) {
                std::vector<int> c(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
                if (s.insert(c).second) grew = true;
            }
    }
    return s;
}

std::vector<std::size_t> class_sizes(const PermGroup& G) {
    std::vector<std::size_t> v;
    for (const auto& c : G.conjugacy_classes()) v.push_back(c.members.size());
    return v;
}

// Oracle: conjugacy classes via conjugation by every element.
std::multiset<std::size_t> naive_class_sizes(const PermGroup& G) {
    std::set<std::set<std::vector<int>>> classes;
    for (const auto& x : G.elements()) {
        std::set<std::vector<int>> c;
        for (const auto& g : G.elements()) c.insert((g * x * g.inverse()).images);
        classes.insert(c);
    }
    std::multiset<std::size_t> out;
    for (const auto& c : classes) out.insert(c.size());
    return out;
}

}  // namespace

TEST_CASE("perm basics") {
    Perm p = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
    CHECK(p.valid());
    CHECK(p.order() == 6);
    CHECK(p.orbit_count() == 2);
    CHECK(p.cycle_type() == std::vector<int>{3, 2});
    CHECK(p.cycle_string() == "(1 2 3)(4 5)");
    CHECK(p.cycle_string(0) == "(0 1 2)(3 4)");
    CHECK((p * p.inverse()).is_identity());
    CHECK(power(p, 6).is_identity());
    CHECK(power(p, -1) == p.inverse());
    CHECK(Perm::identity(3).cycle_string() == "()");
    CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 0}}), ValidationError);
    // h applied first
    Perm a = Perm::from_cycles(3, {{0, 1}}), b = Perm::from_cycles(3, {{1, 2}});
    CHECK((a * b)[1] == a[b[1]]);
}

TEST_CASE("build_group examples match brute-force closure") {
    auto s3 = PermGroup::build(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK(s3.order() == 6);
    auto a4gens = std::vector<Perm>{Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})};
    auto a4 = PermGroup::build(4, a4gens);
    CHECK(a4.order() == naive_closure(4, a4gens).size());
    CHECK(a4.order() == 12);
    auto d5gens = std::vector<Perm>{Perm({1, 2, 3, 4, 0}), Perm({0, 4, 3, 2, 1})};
    auto d5 = PermGroup::build(5, d5gens);
    CHECK(d5.order() == naive_closure(5, d5gens).size());
    CHECK(d5.order() == 10);
    CHECK(std::is_sorted(d5.elements().begin(), d5.elements().end()));
}

TEST_CASE("build_group errors") {
    CHECK_THROWS_AS(PermGroup::build(3, {Perm({0, 0, 1})}), ValidationError);
    CHECK_THROWS_AS(PermGroup::build(3, {Perm({0, 1})}), ValidationError);
    CHECK_THROWS_AS(PermGroup::build(6, {Perm::from_cycles(6, {{0, 1}}), Perm({1, 2, 3, 4, 5, 0})}, "", 100), CapError);
}

TEST_CASE("conjugacy classes") {
    auto s3 = presets::symmetric(3);
    CHECK(class_sizes(s3) == std::vector<std::size_t>{1, 3, 2});
    auto a4 = presets::alternating(4);
    auto sz = class_sizes(a4);
    CHECK(std::multiset<std::size_t>(sz.begin(), sz.end()) == std::multiset<std::size_t>{1, 3, 4, 4});
    auto triv = PermGroup::build(3, {});
    CHECK(triv.conjugacy_classes().size() == 1);
    for (auto G : {presets::symmetric(4), presets::dihedral(6), presets::alternating(5), presets::cyclic(8)}) {
        auto v = class_sizes(G);
        CHECK(std::multiset<std::size_t>(v.begin(), v.end()) == naive_class_sizes(G));
    }
    // S_n: classes correspond to cycle types.
    auto s5 = presets::symmetric(5);
    std::set<std::vector<int>> types;
    for (const auto& c : s5.conjugacy_classes()) types.insert(c.cycle_type);
    CHECK(types.size() == s5.conjugacy_classes().size());
    CHECK(s5.conjugacy_classes().size() == 7);
    CHECK(s5.conjugacy_classes().front().representative.is_identity());
}

TEST_CASE("element data") {
    auto s5 = presets::symmetric(5);
    auto t = s5.element_data(Perm::from_cycles(5, {{0, 1}}));
    CHECK(t.ind == 1);
    CHECK(t.order == 2);
    CHECK(t.regular_orbit_count == 60);
    for (int p : {3, 5, 7}) {
        auto D = presets::dihedral(p);
        std::vector<int> ref(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) ref[static_cast<std::size_t>(i)] = (p - i) % p;
        auto d = D.element_data(Perm(ref));
        CHECK(d.ind == (p - 1) / 2);
        CHECK(d.order == 2);
    }
    auto id = s5.element_data(Perm::identity(5));
    CHECK(id.ind == 0);
    CHECK(id.order == 1);
    CHECK(id.regular_orbit_count == 120);
    CHECK_THROWS_AS(presets::alternating(5).element_data(Perm::from_cycles(5, {{0, 1}})), ValidationError);
}

TEST_CASE("malle exponent") {
    for (int n = 2; n <= 6; ++n) CHECK(presets::symmetric(n).malle_exponent() == Rational(1));
    for (int p : {3, 5, 7}) {
        CHECK(presets::dihedral(p).malle_exponent() == Rational(2, p - 1));
        CHECK(presets::cyclic(p).malle_exponent() == Rational(1, p - 1));
    }
    CHECK(PermGroup::build(4, {}).malle_exponent() == Rational(0));
    // C_6 regular: elements of order 2 have 3 orbits, ind 3.
    CHECK(presets::cyclic(6).malle_exponent() == Rational(1, 3));
}

TEST_CASE("normal subgroups") {
    auto s4 = presets::symmetric(4);
    std::vector<std::size_t> orders;
    for (const auto& h : s4.normal_subgroups()) orders.push_back(h.order);
    CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
    for (int n : {5, 6}) {
        std::vector<std::size_t> o;
        for (const auto& h : presets::alternating(n).normal_subgroups()) o.push_back(h.order);
        CHECK(o.size() == 2);
    }
    std::vector<std::size_t> c6;
    for (const auto& h : presets::cyclic(6).normal_subgroups()) c6.push_back(h.order);
    CHECK(c6 == std::vector<std::size_t>{1, 2, 3, 6});
    // D4 has 6 normal subgroups: 1, center, C4, two Klein groups, D4.
    CHECK(presets::dihedral(4).normal_subgroups().size() == 6);
    for (const auto& h : presets::dihedral(6).normal_subgroups()) CHECK(presets::dihedral(6).is_normal(h));
}

TEST_CASE("quotient order") {
    auto s4 = presets::symmetric(4);
    auto a4sub = s4.closure({Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
    CHECK(a4sub.order == 12);
    CHECK(s4.quotient_order(a4sub, Perm::from_cycles(4, {{0, 1}})) == 2);
    auto a4 = presets::alternating(4);
    auto k4 = a4.closure({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
    CHECK(a4.quotient_order(k4, Perm::from_cycles(4, {{0, 1, 2}})) == 3);
    CHECK(a4.quotient_order(k4, Perm::from_cycles(4, {{0, 1}, {2, 3}})) == 1);
    auto notnormal = s4.closure({Perm::from_cycles(4, {{0, 1}})});
    CHECK_THROWS_AS(s4.quotient_order(notnormal, Perm::from_cycles(4, {{0, 1}})), ValidationError);
}

TEST_CASE("generates") {
    for (int n = 2; n <= 6; ++n) {
        auto S = presets::symmetric(n);
        auto t = S.class_of(Perm::from_cycles(n, {{0, 1}}));
        CHECK(S.generates({t}));
    }
    auto d4 = PermGroup::build(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
    CHECK_FALSE(d4.generates({d4.class_of(Perm::from_cycles(4, {{0, 2}}))}));
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < d4.conjugacy_classes().size(); ++i) all.push_back(i);
    CHECK(d4.generates(all));
    // monotone in S
    auto a = d4.class_of(Perm::from_cycles(4, {{0, 2}}));
    auto b = d4.class_of(Perm::from_cycles(4, {{0, 1}, {2, 3}}));
    CHECK(d4.generates({a, b}));
}

TEST_CASE("class invariants and the discriminant bracket on preset groups") {
    std::vector<PermGroup> groups;
    for (int n = 3; n <= 6; ++n) groups.push_back(presets::symmetric(n));
    groups.push_back(presets::alternating(4));
    groups.push_back(presets::alternating(5));
    for (int n = 3; n <= 7; ++n) groups.push_back(presets::dihedral(n));
    for (int n = 2; n <= 12; ++n) groups.push_back(presets::cyclic(n));
    for (const auto& G : groups) {
        CAPTURE(G.name());
        CHECK(G.is_transitive());
        std::size_t total = 0;
        for (const auto& c : G.conjugacy_classes()) {
            total += c.members.size();
            CHECK(G.order() % c.members.size() == 0);
            auto d0 = G.element_data(c.representative);
            for (auto m : c.members) {
                auto d = G.element_data(G.elements()[m]);
                CHECK(d.order == d0.order);
                CHECK(d.ind == d0.ind);
                CHECK(G.elements()[m].cycle_type() == c.cycle_type);
            }
        }
        CHECK(total == G.order());
        const long g = static_cast<long>(G.order());
        const int n = G.n();
        for (const auto& x : G.elements()) {
            int sum = 0;
            for (int c : x.cycle_type()) sum += c;
            CHECK(sum == n);
            if (x.is_identity()) continue;
            auto d = G.element_data(x);
            CHECK(d.ind == n - static_cast<int>(x.cycle_type().size()));
            Rational r(g - g / d.order, d.ind);
            CHECK(r >= Rational(g, n));
            CHECK(r <= Rational(g, 2));
        }
    }
}

TEST_CASE("preset labels") {
    CHECK(presets::by_label("S3").order() == 6);
    CHECK(presets::by_label("K4").order() == 4);
    CHECK(presets::by_label("F20").order() == 20);
    CHECK(presets::by_label("D4").order() == 8);
    CHECK_THROWS_AS(presets::by_label("Q8"), ValidationError);
    CHECK_THROWS_AS(presets::by_label("S"), ValidationError);
}
