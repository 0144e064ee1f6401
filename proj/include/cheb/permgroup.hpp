#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cheb/common.hpp"

namespace cheb {

// A permutation of {0..n-1}; images[i] is the image of i.
struct Perm {
    std::vector<int> images;

    Perm() = default;
    explicit Perm(std::vector<int> img) : images(std::move(img)) {}

    static Perm identity(int n);
    // Cycles are 0-based point lists, e.g. {{0,1,2},{3,4}}.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images.size()); }
    int operator[](int i) const { return images[static_cast<std::size_t>(i)]; }
    bool is_identity() const;
    bool valid() const;

    Perm inverse() const;
    // Returns the disjoint cycles of length >= 2, each starting at its least point,
    // ordered by starting point.
    std::vector<std::vector<int>> cycles() const;
    // Cycle lengths including fixed points, sorted descending.
    std::vector<int> cycle_type() const;
    int orbit_count() const;
    long order() const;

    // "(1 2)(3 4)" with the given label base (1 for paper-style labels); "()" for identity.
    std::string cycle_string(int base = 1) const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;
};

// Composition: (g * h)(i) = g(h(i)), i.e. h is applied first.
Perm operator*(const Perm& g, const Perm& h);
Perm power(const Perm& g, long k);

struct ElementData {
    long order = 1;
    int orbit_count_points = 0;
    int ind = 0;
    long regular_orbit_count = 0;
};

// A set of elements of a group, stored as a membership mask over the
// group's canonical element order.
struct Subgroup {
    std::vector<bool> mask;
    std::size_t order = 0;
    std::string name;

    bool contains(std::size_t idx) const { return mask[idx]; }
};

struct ConjClass {
    Perm representative;
    std::vector<std::size_t> members;  // indices into PermGroup::elements
    std::vector<int> cycle_type;
};

class PermGroup {
public:
    static constexpr std::size_t kDefaultCap = 100000;

    static PermGroup build(int n, const std::vector<Perm>& generators,
                           std::string name = {}, std::size_t cap = kDefaultCap);

    int n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::string& name() const { return name_; }

    std::optional<std::size_t> index_of(const Perm& g) const;
    bool contains(const Perm& g) const { return index_of(g).has_value(); }
    bool is_transitive() const;

    const std::vector<ConjClass>& conjugacy_classes() const;
    std::size_t class_of(const Perm& g) const;

    ElementData element_data(const Perm& g) const;
    Rational malle_exponent() const;

    Subgroup closure(const std::vector<Perm>& gens) const;
    Subgroup subgroup_from(const std::vector<Perm>& elems, std::string name = {}) const;
    Subgroup whole() const;
    Subgroup trivial() const;
    bool is_normal(const Subgroup& h) const;
    bool is_subgroup(const Subgroup& h) const;
    std::vector<Subgroup> normal_subgroups() const;
    long quotient_order(const Subgroup& h, const Perm& g) const;
    std::size_t index(const Subgroup& h) const { return order() / h.order; }

    bool generates(const std::vector<std::size_t>& class_indices) const;
    bool generates_elements(const std::vector<Perm>& elems) const;

private:
    int n_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
    std::string name_;
    mutable std::vector<ConjClass> classes_;
    mutable std::vector<std::size_t> class_index_;

    std::size_t require_member(const Perm& g) const;
};

namespace presets {
PermGroup symmetric(int n);
PermGroup alternating(int n);
// Regular representation: generator i -> i+1 mod n.
PermGroup cyclic(int n);
// Dihedral group of order 2n on the n vertices of a polygon; the reflection
// generator is i -> -i mod n, which fixes point 0.
PermGroup dihedral(int n);
// Klein four group acting regularly on 4 points.
PermGroup klein4();
// Frobenius group of order 20 on 5 points (affine maps x -> ax+b mod 5).
PermGroup frobenius20();
// Looks up a group by label: S3, A4, C5, D4, K4, F20, ... Throws ValidationError.
PermGroup by_label(const std::string& label);
}  // namespace presets

}  // namespace cheb
