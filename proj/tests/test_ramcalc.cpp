#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cheb/ramcalc.hpp"

using namespace cheb;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("tame exponents from the lemma formulas") {
    auto a4 = presets::alternating(4);
    auto k4 = a4.closure({Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
    auto e = tame_exponents(a4, 4, {k4}, Perm::from_cycles(4, {{0, 1}, {2, 3}}));
    CHECK(e.e_K == 2);
    CHECK(e.e_Kt == 6);
    CHECK(e.e_F == std::vector<long>{0});

    auto s4 = presets::symmetric(4);
    auto H = preset_kernels(s4, RamPreset::S4, 4);
    auto f = tame_exponents(s4, 4, H, Perm::from_cycles(4, {{0, 1, 2, 3}}));
    CHECK(f.e_K == 3);
    CHECK(f.e_Kt == 18);
    CHECK(f.e_F == std::vector<long>{3, 1});

    auto z = tame_exponents(s4, 4, H, Perm::identity(4));
    CHECK(z.e_K == 0);
    CHECK(z.e_Kt == 0);
    CHECK(z.e_F == std::vector<long>{0, 0});

    auto notnormal = s4.closure({Perm::from_cycles(4, {{0, 1}})});
    CHECK_THROWS_AS(tame_exponents(s4, 4, {notnormal}, Perm::identity(4)), ValidationError);
}

TEST_CASE("preset tables match transcribed fixtures byte for byte") {
    struct Case {
        const char* preset;
        const char* file;
    };
    for (auto c : {Case{"sn:5", "table_sn5.csv"}, Case{"s4", "table_s4.csv"}, Case{"a4", "table_a4.csv"},
                   Case{"dp:5", "table_d5.csv"}, Case{"c2p:3", "table_c6.csv"}, Case{"d4", "table_d4.csv"}}) {
        CAPTURE(c.preset);
        auto [p, k] = parse_ram_preset(c.preset);
        CHECK(ram_table_csv(ram_table(p, k)) == read_file(std::string(GOLDEN_DIR) + "/" + c.file));
    }
}

TEST_CASE("table rows agree with tame_exponents and general table invariants") {
    for (auto pre : {"sn:3", "sn:4", "sn:6", "s4", "a4", "dp:3", "dp:7", "c2p:5", "d4"}) {
        CAPTURE(pre);
        auto [p, k] = parse_ram_preset(pre);
        auto t = ram_table(p, k);
        REQUIRE(!t.rows.empty());
        for (long v : t.rows.front().values) CHECK(v == 0);
        for (const auto& r : t.rows)
            for (long v : r.values) CHECK(v >= 0);
    }
    // Sn rows for general n: transposition (1, n!-n!/2, 1), n-cycle (n-1, n!-(n-1)!, eps_n).
    for (int n = 4; n <= 7; ++n) {
        auto t = ram_table(RamPreset::Sn, n);
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(t.rows[1].values == std::vector<long>{1, fact / 2, 1});
        CHECK(t.rows.back().values == std::vector<long>{n - 1, fact - fact / n, n % 2 == 0 ? 1 : 0});
    }
    // Dp rows for general p.
    for (int p : {3, 7, 11}) {
        auto t = ram_table(RamPreset::Dp, p);
        CHECK(t.rows.size() == static_cast<std::size_t>(2 + (p - 1) / 2));
        CHECK(t.rows[1].values == std::vector<long>{(p - 1) / 2, p, 1});
        for (std::size_t i = 2; i < t.rows.size(); ++i)
            CHECK(t.rows[i].values == std::vector<long>{p - 1, 2 * (p - 1), 0});
    }
    // C2p rows for general p.
    for (int p : {5, 7}) {
        auto t = ram_table(RamPreset::C2p, p);
        CHECK(t.rows[1].values == std::vector<long>{p, 0, 1});
        CHECK(t.rows[2].values == std::vector<long>{2 * p - 2, p - 1, 0});
        CHECK(t.rows[3].values == std::vector<long>{2 * p - 1, p - 1, 1});
    }
}

TEST_CASE("preset parameter validation") {
    CHECK_THROWS_AS(ram_table(RamPreset::Dp, 9), ValidationError);
    CHECK_THROWS_AS(ram_table(RamPreset::Dp, 2), ValidationError);
    CHECK_THROWS_AS(ram_table(RamPreset::C2p, 4), ValidationError);
    CHECK_THROWS_AS(ram_table(RamPreset::Sn, 2), ValidationError);
    CHECK_THROWS_AS(parse_ram_preset("q8"), ValidationError);
    CHECK_THROWS_AS(parse_ram_preset("c7"), ValidationError);
    CHECK(parse_ram_preset("S5").first == RamPreset::Sn);
    CHECK(parse_ram_preset("c10").second == 5);
    CHECK(parse_ram_preset("d7").first == RamPreset::Dp);
}

TEST_CASE("text layout carries the same cells") {
    auto t = ram_table(RamPreset::D4, 4);
    auto txt = ram_table_text(t);
    CHECK(txt.find("F3=Kt^K4'") != std::string::npos);
    CHECK(txt.find("[(1 2 3 4)]") != std::string::npos);
    std::istringstream is(txt);
    std::string line;
    std::size_t width = 0, lines = 0;
    std::getline(is, line);  // caption
    while (std::getline(is, line)) {
        if (width == 0) width = line.size();
        CHECK(line.size() == width);
        ++lines;
    }
    CHECK(lines == t.rows.size() + 4);
}

TEST_CASE("generic table rows for cyclic groups") {
    for (int n : {6, 8, 9, 10, 12}) {
        auto G = presets::cyclic(n);
        std::vector<Subgroup> H;
        for (const auto& h : G.normal_subgroups())
            if (h.order > 1 && h.order < G.order()) H.push_back(h);
        std::vector<int> r(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
        auto e = tame_exponents(G, n, H, Perm(r));
        CHECK(e.e_K == n - 1);
        for (long f : e.e_F) {
            CHECK(f >= 1);
            CHECK(f <= n - 1);
        }
    }
    auto s3 = presets::symmetric(3);
    auto t = ram_table_generic(s3, 3, {s3.normal_subgroups()[1]}, {"A3"});
    CHECK(t.rows.size() == 3);
    CHECK(t.rows[1].values == std::vector<long>{1, 3, 1});
}

TEST_CASE("disc ratio bounds") {
    auto s3 = disc_ratio_bounds(presets::symmetric(3), 3);
    CHECK(s3.max_ratio == Rational(3));
    CHECK(s3.min_ratio == Rational(2));
    CHECK(s3.max_ratio == s3.upper_bracket);
    CHECK(s3.min_ratio == s3.lower_bracket);
    CHECK(s3.inside);
    auto d5 = disc_ratio_bounds(presets::dihedral(5), 5);
    CHECK(d5.max_ratio == Rational(5, 2));
    CHECK(d5.min_ratio == Rational(2));
    for (int n = 3; n <= 6; ++n) {
        auto b = disc_ratio_bounds(presets::symmetric(n), n);
        CHECK(b.max_ratio == b.upper_bracket);
        CHECK(b.inside);
    }
    double lg = std::log(6.0);
    CHECK(s3.log_wild_constant == doctest::Approx(2 * 9 * lg * lg));
}

TEST_CASE("mult relation") {
    auto s4 = presets::symmetric(4);
    auto H = preset_kernels(s4, RamPreset::S4, 4);
    auto m = mult_relation(s4, 4, H[0], {s4.class_of(Perm::from_cycles(4, {{0, 1}}))});
    CHECK(m.controlled);
    REQUIRE(m.ratio);
    CHECK(*m.ratio == Rational(1, 3));
    for (int p : {3, 5, 7}) {
        auto D = presets::dihedral(p);
        auto Hp = preset_kernels(D, RamPreset::Dp, p);
        std::vector<int> ref(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) ref[static_cast<std::size_t>(i)] = (p - i) % p;
        auto r = mult_relation(D, p, Hp[0], {D.class_of(Perm(ref))});
        CHECK(r.controlled);
        CHECK(*r.ratio == Rational((p - 1) / 2));
    }
    for (int n = 3; n <= 6; ++n) {
        auto S = presets::symmetric(n);
        auto An = preset_kernels(S, RamPreset::Sn, n);
        auto r = mult_relation(S, n, An[0], {S.class_of(Perm::from_cycles(n, {{0, 1}}))});
        CHECK(r.controlled);
        CHECK(*r.ratio == Rational(1));
    }
    auto d4 = PermGroup::build(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
    auto Hd = preset_kernels(d4, RamPreset::D4, 4);
    std::vector<std::size_t> all;
    for (std::size_t i = 1; i < d4.conjugacy_classes().size(); ++i) all.push_back(i);
    auto z = mult_relation(d4, 4, Hd[1], {d4.class_of(Perm::from_cycles(4, {{0, 2}, {1, 3}})),
                                           d4.class_of(Perm::from_cycles(4, {{0, 1, 2, 3}})),
                                           d4.class_of(Perm::from_cycles(4, {{0, 2}}))});
    CHECK_FALSE(z.controlled);
    CHECK_FALSE(z.ratio.has_value());
    // the double transposition alone does not generate D4
    CHECK_THROWS_AS(mult_relation(d4, 4, Hd[1], {d4.class_of(Perm::from_cycles(4, {{0, 2}, {1, 3}}))}),
                    ValidationError);
    // A4 with both 3-cycle classes: controlled, ratio 1
    auto a4 = presets::alternating(4);
    auto Ha = preset_kernels(a4, RamPreset::A4, 4);
    auto ra = mult_relation(a4, 4, Ha[0], {a4.class_of(Perm::from_cycles(4, {{0, 1, 2}})),
                                          a4.class_of(Perm::from_cycles(4, {{0, 2, 1}}))});
    CHECK(ra.controlled);
    CHECK(*ra.ratio == Rational(1));
}
