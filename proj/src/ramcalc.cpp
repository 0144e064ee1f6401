#include "cheb/ramcalc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace cheb {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> seq(int a, int b) {
    std::vector<int> v;
    for (int i = a; i < b; ++i) v.push_back(i);
    return v;
}

// A row of a preset table: the label printed in the first column and the
// elements that the row stands for.  All of them must give the same exponents.
struct RowSpec {
    std::string label;
    std::vector<Perm> members;
};

RamRow evaluate_row(const PermGroup& G, int n, const std::vector<Subgroup>& H, const RowSpec& spec,
                    bool merge_K_Kt) {
    std::optional<TameExponents> first;
    for (const auto& g : spec.members) {
        TameExponents e = tame_exponents(G, n, H, g);
        if (!first) {
            first = e;
        } else if (e.e_K != first->e_K || e.e_Kt != first->e_Kt || e.e_F != first->e_F) {
            throw ValidationError("row " + spec.label + ": members of the inertia type disagree on exponents");
        }
    }
    RamRow row{spec.label, {}};
    row.values.push_back(first->e_K);
    if (!merge_K_Kt) row.values.push_back(first->e_Kt);
    for (long v : first->e_F) row.values.push_back(v);
    return row;
}

std::vector<Perm> class_members(const PermGroup& G, const Perm& rep) {
    const auto& cls = G.conjugacy_classes()[G.class_of(rep)];
    std::vector<Perm> out;
    for (auto m : cls.members) out.push_back(G.elements()[m]);
    return out;
}

RowSpec class_row(const PermGroup& G, const Perm& rep) {
    return {"[" + rep.cycle_string(1) + "]", class_members(G, rep)};
}

Subgroup even_part(const PermGroup& G, const std::string& name) {
    std::vector<Perm> ev;
    for (const auto& g : G.elements()) {
        int transpositions = 0;
        for (int c : g.cycle_type()) transpositions += c - 1;
        if (transpositions % 2 == 0) ev.push_back(g);
    }
    return G.subgroup_from(ev, name);
}

Subgroup klein_in(const PermGroup& G) {
    return G.subgroup_from({Perm::identity(4), Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                            Perm::from_cycles(4, {{0, 2}, {1, 3}}), Perm::from_cycles(4, {{0, 3}, {1, 2}})},
                           "K4");
}

PermGroup paper_d4() {
    return PermGroup::build(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})}, "D4");
}

}  // namespace

TameExponents tame_exponents(const PermGroup& G, int n, const std::vector<Subgroup>& H_list,
                             const Perm& pi) {
    ElementData d = G.element_data(pi);
    TameExponents e;
    e.e_K = n - d.orbit_count_points;
    long g = static_cast<long>(G.order());
    e.e_Kt = g - g / d.order;
    for (const auto& H : H_list) {
        long q = static_cast<long>(G.index(H));
        long ord = G.quotient_order(H, pi);
        e.e_F.push_back(q - q / ord);
    }
    return e;
}

std::pair<RamPreset, int> parse_ram_preset(const std::string& raw) {
    std::string s;
    for (char c : raw) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto num_after = [&](std::size_t pos) {
        std::string t = s.substr(pos);
        if (!t.empty() && t[0] == ':') t = t.substr(1);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ValidationError("bad preset '" + raw + "'");
        return std::stoi(t);
    };
    if (s == "s4") return {RamPreset::S4, 4};
    if (s == "a4") return {RamPreset::A4, 4};
    if (s == "d4") return {RamPreset::D4, 4};
    if (s.rfind("sn", 0) == 0) return {RamPreset::Sn, num_after(2)};
    if (s.rfind("dp", 0) == 0) return {RamPreset::Dp, num_after(2)};
    if (s.rfind("c2p", 0) == 0) return {RamPreset::C2p, num_after(3)};
    if (s.size() >= 2 && s[0] == 's') return {RamPreset::Sn, num_after(1)};
    if (s.size() >= 2 && s[0] == 'd') return {RamPreset::Dp, num_after(1)};
    if (s.size() >= 2 && s[0] == 'c') {
        int m = num_after(1);
        if (m % 2 != 0) throw ValidationError("cyclic preset must be C_{2p}, got '" + raw + "'");
        return {RamPreset::C2p, m / 2};
    }
    throw ValidationError("unknown preset '" + raw + "'");
}

std::vector<Subgroup> preset_kernels(const PermGroup& G, RamPreset preset, int param,
                                     std::vector<std::string>* names) {
    std::vector<Subgroup> H;
    std::vector<std::string> nm;
    switch (preset) {
        case RamPreset::Sn:
            H.push_back(even_part(G, "A" + std::to_string(param)));
            nm = {"A" + std::to_string(param)};
            break;
        case RamPreset::S4:
            H = {klein_in(G), even_part(G, "A4")};
            nm = {"K4", "A4"};
            break;
        case RamPreset::A4:
            H = {klein_in(G)};
            nm = {"K4"};
            break;
        case RamPreset::Dp: {
            std::vector<int> rot(static_cast<std::size_t>(param));
            for (int i = 0; i < param; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % param;
            H = {G.closure({Perm(rot)})};
            nm = {"C" + std::to_string(param)};
            break;
        }
        case RamPreset::C2p: {
            int n = 2 * param;
            std::vector<int> r(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
            Perm rot(r);
            H = {G.closure({power(rot, param)}), G.closure({power(rot, 2)})};
            nm = {"C2", "C" + std::to_string(param)};
            break;
        }
        case RamPreset::D4:
            H = {G.closure({Perm::from_cycles(4, {{0, 1, 2, 3}})}),
                 G.subgroup_from({Perm::identity(4), Perm::from_cycles(4, {{0, 2}}),
                                  Perm::from_cycles(4, {{0, 2}, {1, 3}}), Perm::from_cycles(4, {{1, 3}})}),
                 klein_in(G)};
            nm = {"C4", "K4", "K4'"};
            break;
    }
    for (std::size_t i = 0; i < H.size(); ++i) {
        H[i].name = nm[i];
        if (!G.is_normal(H[i])) throw std::logic_error("preset kernel " + nm[i] + " is not normal");
    }
    if (names) *names = nm;
    return H;
}

RamTable ram_table(RamPreset preset, int param) {
    RamTable t;
    std::vector<RowSpec> rows;
    std::vector<std::string> Hn;
    bool merge = false;
    PermGroup G;
    int n = 0;
    switch (preset) {
        case RamPreset::Sn: {
            n = param;
            if (n < 3) throw ValidationError("Sn preset needs n >= 3");
            G = presets::symmetric(n);
            t.preset = "Sn:" + std::to_string(n);
            t.caption = "Exponents of p not dividing n! when Gal(Kt/Q) = S" + std::to_string(n);
            rows.push_back(class_row(G, Perm::identity(n)));
            rows.push_back(class_row(G, Perm::from_cycles(n, {{0, 1}})));
            rows.push_back(class_row(G, Perm::from_cycles(n, {{0, 1, 2}})));
            if (n >= 4) {
                rows.push_back(class_row(G, Perm::from_cycles(n, {{0, 1}, {2, 3}})));
                rows.push_back(class_row(G, Perm::from_cycles(n, {seq(0, n)})));
            }
            break;
        }
        case RamPreset::S4:
            n = 4;
            G = presets::symmetric(4);
            t.preset = "S4";
            t.caption = "Exponents of p not dividing |S4| when Gal(Kt/Q) = S4";
            for (auto c : std::vector<std::vector<std::vector<int>>>{{}, {{0, 1}}, {{0, 1, 2}}, {{0, 1}, {2, 3}}, {{0, 1, 2, 3}}})
                rows.push_back(class_row(G, Perm::from_cycles(4, c)));
            break;
        case RamPreset::A4:
            n = 4;
            G = presets::alternating(4);
            t.preset = "A4";
            t.caption = "Exponents of p not dividing |A4| when Gal(Kt/Q) = A4";
            for (auto c : std::vector<std::vector<std::vector<int>>>{{}, {{0, 1, 2}}, {{0, 2, 1}}, {{0, 1}, {2, 3}}})
                rows.push_back(class_row(G, Perm::from_cycles(4, c)));
            break;
        case RamPreset::Dp: {
            int p = param;
            if (!is_odd_prime(p)) throw ValidationError("Dp preset needs an odd prime p");
            n = p;
            G = presets::dihedral(p);
            t.preset = "Dp:" + std::to_string(p);
            t.caption = "Exponents of l not dividing |D" + std::to_string(p) + "| when Gal(Kt/Q) = D" + std::to_string(p);
            rows.push_back(class_row(G, Perm::identity(p)));
            std::vector<int> ref(static_cast<std::size_t>(p)), rot(static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i) {
                ref[static_cast<std::size_t>(i)] = (p - i) % p;
                rot[static_cast<std::size_t>(i)] = (i + 1) % p;
            }
            rows.push_back(class_row(G, Perm(ref)));
            for (int k = 1; k <= (p - 1) / 2; ++k) rows.push_back(class_row(G, power(Perm(rot), k)));
            break;
        }
        case RamPreset::C2p: {
            int p = param;
            if (!is_odd_prime(p)) throw ValidationError("C2p preset needs an odd prime p");
            n = 2 * p;
            G = presets::cyclic(n);
            merge = true;
            t.preset = "C2p:" + std::to_string(p);
            t.caption = "Exponents of l not dividing |C" + std::to_string(n) + "| when Gal(Kt/Q) = C" + std::to_string(n);
            std::vector<int> r(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
            // Type (a,b): a = 1 iff the Z/2 coordinate is odd, b = 1 iff the Z/p
            // coordinate is nonzero.  r^k has coordinates (k mod 2, k mod p).
            std::map<std::pair<int, int>, std::vector<Perm>> types;
            for (int k = 0; k < n; ++k) types[{k % 2, (k % p) != 0}].push_back(power(Perm(r), k));
            for (auto ab : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}})
                rows.push_back({"(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")", types[ab]});
            break;
        }
        case RamPreset::D4:
            n = 4;
            G = paper_d4();
            t.preset = "D4";
            t.caption = "Exponents of p not dividing |D4| when Gal(Kt/Q) = D4";
            for (auto c : std::vector<std::vector<std::vector<int>>>{{}, {{0, 2}, {1, 3}}, {{0, 2}}, {{0, 1}, {2, 3}}, {{0, 1, 2, 3}}})
                rows.push_back(class_row(G, Perm::from_cycles(4, c)));
            break;
    }
    auto H = preset_kernels(G, preset, param, &Hn);
    if (merge) {
        t.columns.push_back("K=Kt");
    } else {
        t.columns = {"K", "Kt"};
    }
    for (std::size_t i = 0; i < Hn.size(); ++i) {
        std::string prefix = Hn.size() > 1 && !merge ? "F" + std::to_string(i + 1) : "F";
        t.columns.push_back(prefix + "=Kt^" + Hn[i]);
    }
    for (const auto& spec : rows) t.rows.push_back(evaluate_row(G, n, H, spec, merge));
    return t;
}

RamTable ram_table_generic(const PermGroup& G, int n, const std::vector<Subgroup>& H_list,
                           const std::vector<std::string>& H_names) {
    RamTable t;
    t.preset = G.name().empty() ? "custom" : G.name();
    t.caption = "Exponents of tamely ramified p for " + t.preset;
    t.columns = {"K", "Kt"};
    for (std::size_t i = 0; i < H_list.size(); ++i)
        t.columns.push_back("F" + std::to_string(i + 1) + "=Kt^" + (i < H_names.size() ? H_names[i] : "H" + std::to_string(i + 1)));
    for (const auto& c : G.conjugacy_classes()) {
        RowSpec spec{"[" + c.representative.cycle_string(1) + "]", {}};
        for (auto m : c.members) spec.members.push_back(G.elements()[m]);
        t.rows.push_back(evaluate_row(G, n, H_list, spec, false));
    }
    return t;
}

std::string ram_table_csv(const RamTable& t) {
    std::ostringstream os;
    os << "inertia";
    for (const auto& c : t.columns) os << ',' << c;
    os << '\n';
    for (const auto& r : t.rows) {
        os << '"' << r.label << '"';
        for (long v : r.values) os << ',' << v;
        os << '\n';
    }
    return os.str();
}

std::string ram_table_text(const RamTable& t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"Inertia type"};
    head.insert(head.end(), t.columns.begin(), t.columns.end());
    cells.push_back(head);
    for (const auto& r : t.rows) {
        std::vector<std::string> line{r.label};
        for (long v : r.values) line.push_back(std::to_string(v));
        cells.push_back(line);
    }
    std::vector<std::size_t> w(head.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
    std::ostringstream os;
    os << t.caption << '\n';
    auto rule = [&] {
        os << '+';
        for (auto x : w) os << std::string(x + 2, '-') << '+';
        os << '\n';
    };
    rule();
    for (std::size_t l = 0; l < cells.size(); ++l) {
        os << '|';
        for (std::size_t i = 0; i < cells[l].size(); ++i) {
            const auto& s = cells[l][i];
            if (i == 0)
                os << ' ' << s << std::string(w[i] - s.size(), ' ') << " |";
            else
                os << ' ' << std::string(w[i] - s.size(), ' ') << s << " |";
        }
        os << '\n';
        if (l == 0) rule();
    }
    rule();
    return os.str();
}

DiscRatioBounds disc_ratio_bounds(const PermGroup& G, int n) {
    DiscRatioBounds b;
    long g = static_cast<long>(G.order());
    if (g < 2) throw ValidationError("disc_ratio_bounds needs a nontrivial group");
    b.lower_bracket = Rational(g, n);
    b.upper_bracket = Rational(g, 2);
    bool first = true;
    for (const auto& x : G.elements()) {
        if (x.is_identity()) continue;
        ElementData d = G.element_data(x);
        Rational r(g - g / d.order, n - d.orbit_count_points);
        if (first || r < b.min_ratio) b.min_ratio = r;
        if (first || r > b.max_ratio) b.max_ratio = r;
        first = false;
    }
    b.inside = b.min_ratio >= b.lower_bracket && b.max_ratio <= b.upper_bracket;
    double lg = std::log(static_cast<double>(g));
    b.log_wild_constant = 2.0 * n * n * lg * lg;
    return b;
}

MultRelation mult_relation(const PermGroup& G, int n, const Subgroup& H,
                           const std::vector<std::size_t>& inertia_classes) {
    if (!G.is_normal(H)) throw ValidationError("mult_relation: H is not normal");
    if (inertia_classes.empty()) throw ValidationError("mult_relation: empty inertia type");
    if (!G.generates(inertia_classes))
        throw ValidationError("mult_relation: inertia type does not generate G (invalid family)");
    MultRelation m;
    m.controlled = true;
    const auto& cls = G.conjugacy_classes();
    std::optional<Rational> common;
    bool constant = true;
    for (auto c : inertia_classes) {
        const Perm& rep = cls[c].representative;
        TameExponents e = tame_exponents(G, n, {H}, rep);
        m.class_labels.push_back("[" + rep.cycle_string(1) + "]");
        if (e.e_F[0] == 0) {
            m.controlled = false;
            m.per_class.emplace_back(std::nullopt);
            continue;
        }
        Rational r(e.e_K, e.e_F[0]);
        m.per_class.emplace_back(r);
        if (!common) common = r;
        else if (*common != r) constant = false;
    }
    if (!constant) m.controlled = false;
    if (m.controlled) m.ratio = common;
    return m;
}

}  // namespace cheb
