#include "cheb/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cheb {

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i];
            if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)])
                throw ValidationError("cycle notation: bad or repeated point " + std::to_string(a));
            seen[static_cast<std::size_t>(a)] = true;
            p.images[static_cast<std::size_t>(a)] = c[(i + 1) % c.size()];
        }
    }
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)[i] != i) return false;
    return true;
}

bool Perm::valid() const {
    std::vector<bool> hit(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= degree() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(images.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>((*this)[i])] = i;
    return Perm(std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> c;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)[j]) {
            seen[static_cast<std::size_t>(j)] = true;
            c.push_back(j);
        }
        if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> t;
    std::vector<bool> seen(images.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)[j]) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

int Perm::orbit_count() const { return static_cast<int>(cycle_type().size()); }

long Perm::order() const {
    long l = 1;
    for (int c : cycle_type()) l = std::lcm(l, static_cast<long>(c));
    return l;
}

std::string Perm::cycle_string(int base) const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c[i] + base);
        }
        s += ')';
    }
    return s;
}

Perm operator*(const Perm& g, const Perm& h) {
    std::vector<int> img(h.images.size());
    for (int i = 0; i < h.degree(); ++i) img[static_cast<std::size_t>(i)] = g[h[i]];
    return Perm(std::move(img));
}

Perm power(const Perm& g, long k) {
    Perm base = k < 0 ? g.inverse() : g;
    if (k < 0) k = -k;
    Perm r = Perm::identity(g.degree());
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

PermGroup PermGroup::build(int n, const std::vector<Perm>& generators, std::string name,
                           std::size_t cap) {
    if (n < 1) throw ValidationError("group needs n >= 1");
    for (const auto& g : generators)
        if (g.degree() != n || !g.valid())
            throw ValidationError("generator is not a bijection on " + std::to_string(n) + " points");
    std::set<Perm> seen;
    std::deque<Perm> queue;
    Perm id = Perm::identity(n);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Perm nx = cur * g;
            if (seen.insert(nx).second) {
                if (seen.size() > cap)
                    throw CapError("group closure exceeds cap of " + std::to_string(cap) + " elements");
                queue.push_back(std::move(nx));
            }
        }
    }
    PermGroup G;
    G.n_ = n;
    G.elements_.assign(seen.begin(), seen.end());
    G.generators_ = generators;
    G.name_ = std::move(name);
    G.conjugacy_classes();  // fill the cache now so the group is read-only afterwards
    return G;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermGroup::require_member(const Perm& g) const {
    auto idx = index_of(g);
    if (!idx) throw ValidationError("permutation " + g.cycle_string(0) + " is not in the group");
    return *idx;
}

bool PermGroup::is_transitive() const {
    std::vector<bool> hit(static_cast<std::size_t>(n_), false);
    for (const auto& g : elements_) hit[static_cast<std::size_t>(g[0])] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

const std::vector<ConjClass>& PermGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    // Orbits under conjugation by the generators are the full conjugacy classes.
    const std::vector<Perm>& conj_by = generators_;
    const std::size_t N = elements_.size();
    std::vector<long> assigned(N, -1);
    std::vector<ConjClass> raw;
    for (std::size_t i = 0; i < N; ++i) {
        if (assigned[i] >= 0) continue;
        ConjClass c;
        std::deque<std::size_t> q{i};
        assigned[i] = static_cast<long>(raw.size());
        while (!q.empty()) {
            std::size_t k = q.front();
            q.pop_front();
            c.members.push_back(k);
            for (const auto& s : conj_by) {
                Perm y = s * elements_[k] * s.inverse();
                std::size_t j = *index_of(y);
                if (assigned[j] < 0) {
                    assigned[j] = static_cast<long>(raw.size());
                    q.push_back(j);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = elements_[c.members.front()];
        c.cycle_type = c.representative.cycle_type();
        raw.push_back(std::move(c));
    }
    // Order by cycle type (ascending lexicographic on the descending partition, so
    // the identity comes first), then by representative.
    std::sort(raw.begin(), raw.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.cycle_type != b.cycle_type) return a.cycle_type < b.cycle_type;
        return a.representative < b.representative;
    });
    class_index_.assign(N, 0);
    for (std::size_t c = 0; c < raw.size(); ++c)
        for (auto m : raw[c].members) class_index_[m] = c;
    classes_ = std::move(raw);
    return classes_;
}

std::size_t PermGroup::class_of(const Perm& g) const {
    std::size_t idx = require_member(g);
    conjugacy_classes();
    return class_index_[idx];
}

ElementData PermGroup::element_data(const Perm& g) const {
    require_member(g);
    ElementData d;
    d.order = g.order();
    d.orbit_count_points = g.orbit_count();
    d.ind = n_ - d.orbit_count_points;
    d.regular_orbit_count = static_cast<long>(order()) / d.order;
    return d;
}

Rational PermGroup::malle_exponent() const {
    int best = 0;
    for (const auto& g : elements_) {
        if (g.is_identity()) continue;
        int ind = n_ - g.orbit_count();
        if (best == 0 || ind < best) best = ind;
    }
    if (best == 0) return Rational(0);
    return Rational(1, best);
}

Subgroup PermGroup::closure(const std::vector<Perm>& gens) const {
    Subgroup h;
    h.mask.assign(elements_.size(), false);
    std::vector<std::size_t> gidx;
    for (const auto& g : gens) gidx.push_back(require_member(g));
    std::size_t id = *index_of(Perm::identity(n_));
    std::deque<std::size_t> q{id};
    h.mask[id] = true;
    while (!q.empty()) {
        std::size_t k = q.front();
        q.pop_front();
        for (auto gi : gidx) {
            std::size_t j = *index_of(elements_[k] * elements_[gi]);
            if (!h.mask[j]) {
                h.mask[j] = true;
                q.push_back(j);
            }
        }
    }
    h.order = static_cast<std::size_t>(std::count(h.mask.begin(), h.mask.end(), true));
    return h;
}

Subgroup PermGroup::subgroup_from(const std::vector<Perm>& elems, std::string name) const {
    Subgroup h;
    h.mask.assign(elements_.size(), false);
    for (const auto& e : elems) h.mask[require_member(e)] = true;
    h.order = static_cast<std::size_t>(std::count(h.mask.begin(), h.mask.end(), true));
    h.name = std::move(name);
    return h;
}

Subgroup PermGroup::whole() const {
    Subgroup h{std::vector<bool>(elements_.size(), true), elements_.size(), "G"};
    return h;
}

Subgroup PermGroup::trivial() const {
    Subgroup h{std::vector<bool>(elements_.size(), false), 1, "1"};
    h.mask[*index_of(Perm::identity(n_))] = true;
    return h;
}

bool PermGroup::is_subgroup(const Subgroup& h) const {
    if (h.mask.size() != elements_.size()) return false;
    if (!h.mask[*index_of(Perm::identity(n_))]) return false;
    // Greedy generating set: each new generator at least doubles the closure,
    // so at most log2|H| closures are computed.
    std::vector<Perm> gens;
    Subgroup cur = trivial();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!h.mask[i] || cur.mask[i]) continue;
        gens.push_back(elements_[i]);
        cur = closure(gens);
        for (std::size_t j = 0; j < cur.mask.size(); ++j)
            if (cur.mask[j] && !h.mask[j]) return false;
    }
    return true;
}

bool PermGroup::is_normal(const Subgroup& h) const {
    if (!is_subgroup(h)) return false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!h.mask[i]) continue;
        for (const auto& s : generators_)
            if (!h.mask[*index_of(s * elements_[i] * s.inverse())]) return false;
    }
    return true;
}

std::vector<Subgroup> PermGroup::normal_subgroups() const {
    const auto& cls = conjugacy_classes();
    auto members_of = [&](const std::vector<bool>& mask) {
        std::vector<Perm> v;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) v.push_back(elements_[i]);
        return v;
    };
    std::set<std::vector<bool>> found;
    found.insert(trivial().mask);
    for (const auto& c : cls) {
        std::vector<Perm> gens;
        for (auto m : c.members) gens.push_back(elements_[m]);
        found.insert(closure(gens).mask);
    }
    // Every normal subgroup is generated by the classes it contains, so closing
    // the normal closures of single classes under joins finds them all.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<bool>> cur(found.begin(), found.end());
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b) {
                std::vector<bool> u(cur[a].size());
                for (std::size_t i = 0; i < u.size(); ++i) u[i] = cur[a][i] || cur[b][i];
                if (found.count(u)) continue;
                auto j = closure(members_of(u)).mask;
                if (found.insert(j).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    for (const auto& m : found) {
        Subgroup h{m, static_cast<std::size_t>(std::count(m.begin(), m.end(), true)), {}};
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.mask > b.mask;
    });
    return out;
}

long PermGroup::quotient_order(const Subgroup& h, const Perm& g) const {
    require_member(g);
    if (!is_normal(h)) throw ValidationError("quotient_order: subgroup is not normal");
    Perm x = g;
    for (long m = 1; m <= static_cast<long>(order()); ++m) {
        if (h.mask[*index_of(x)]) return m;
        x = x * g;
    }
    throw std::logic_error("quotient_order: no power of g lies in H");
}

bool PermGroup::generates(const std::vector<std::size_t>& class_indices) const {
    const auto& cls = conjugacy_classes();
    std::vector<Perm> gens;
    for (auto c : class_indices) {
        if (c >= cls.size()) throw ValidationError("class index out of range");
        for (auto m : cls[c].members) gens.push_back(elements_[m]);
    }
    return closure(gens).order == order();
}

bool PermGroup::generates_elements(const std::vector<Perm>& elems) const {
    return closure(elems).order == order();
}

namespace presets {

static Perm cycle_perm(int n, std::vector<int> pts) { return Perm::from_cycles(n, {std::move(pts)}); }

PermGroup symmetric(int n) {
    if (n < 1) throw ValidationError("S_n needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 2) {
        gens.push_back(cycle_perm(n, {0, 1}));
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        if (n > 2) gens.push_back(cycle_perm(n, all));
    }
    return PermGroup::build(n, gens, "S" + std::to_string(n));
}

PermGroup alternating(int n) {
    if (n < 1) throw ValidationError("A_n needs n >= 1");
    std::vector<Perm> gens;
    for (int k = 2; k < n; ++k) gens.push_back(cycle_perm(n, {0, 1, k}));
    return PermGroup::build(n, gens, "A" + std::to_string(n));
}

PermGroup cyclic(int n) {
    if (n < 1) throw ValidationError("C_n needs n >= 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    return PermGroup::build(n, {Perm(img)}, "C" + std::to_string(n));
}

PermGroup dihedral(int n) {
    if (n < 3) throw ValidationError("D_n needs n >= 3");
    std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = (i + 1) % n;
        ref[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return PermGroup::build(n, {Perm(rot), Perm(ref)}, "D" + std::to_string(n));
}

PermGroup klein4() {
    return PermGroup::build(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                            "K4");
}

PermGroup frobenius20() {
    // x -> x+1 and x -> 2x (mod 5)
    return PermGroup::build(5, {Perm({1, 2, 3, 4, 0}), Perm({0, 2, 4, 1, 3})}, "F20");
}

PermGroup by_label(const std::string& label) {
    if (label.size() < 2) throw ValidationError("unknown group label '" + label + "'");
    if (label == "K4" || label == "V4") return klein4();
    if (label == "F20") return frobenius20();
    char kind = label[0];
    int k = 0;
    try {
        std::size_t pos = 0;
        k = std::stoi(label.substr(1), &pos);
        if (pos != label.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ValidationError("unknown group label '" + label + "'");
    }
    if (k < 1 || k > 12) throw ValidationError("group label '" + label + "' out of supported range");
    switch (kind) {
        case 'S': return symmetric(k);
        case 'A': return alternating(k);
        case 'C': return cyclic(k);
        case 'D': return dihedral(k);
        default: throw ValidationError("unknown group label '" + label + "'");
    }
}

}  // namespace presets
}  // namespace cheb
