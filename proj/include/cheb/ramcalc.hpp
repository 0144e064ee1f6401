#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cheb/permgroup.hpp"

namespace cheb {

struct TameExponents {
    long e_K = 0;
    long e_Kt = 0;
    std::vector<long> e_F;  // one per supplied normal subgroup H, for F = Kt^H
};

// Exact exponents of a tamely ramified prime whose inertia group is generated by pi.
TameExponents tame_exponents(const PermGroup& G, int n, const std::vector<Subgroup>& H_list,
                             const Perm& pi);

struct RamRow {
    std::string label;
    std::vector<long> values;
};

struct RamTable {
    std::string preset;
    std::string caption;
    std::vector<std::string> columns;  // value columns, after the inertia-type column
    std::vector<RamRow> rows;
};

enum class RamPreset { Sn, S4, A4, Dp, C2p, D4 };

// Parses "s5", "sn:5", "s4", "a4", "d5", "dp:5", "c2p:3", "c6", "d4" (case-insensitive).
std::pair<RamPreset, int> parse_ram_preset(const std::string& s);

RamTable ram_table(RamPreset preset, int param = 0);

// Table for an arbitrary group: one row per conjugacy class in canonical order.
RamTable ram_table_generic(const PermGroup& G, int n, const std::vector<Subgroup>& H_list,
                           const std::vector<std::string>& H_names);

std::string ram_table_csv(const RamTable& t);
std::string ram_table_text(const RamTable& t);

// Irreducible-representation kernels used as fixed-field subgroups for the preset groups.
std::vector<Subgroup> preset_kernels(const PermGroup& G, RamPreset preset, int param,
                                     std::vector<std::string>* names = nullptr);

struct DiscRatioBounds {
    Rational min_ratio;
    Rational max_ratio;
    Rational lower_bracket;  // |G|/n
    Rational upper_bracket;  // |G|/2
    bool inside = false;
    double log_wild_constant = 0;  // log of |G|^(2 n^2 ln|G|)
};

DiscRatioBounds disc_ratio_bounds(const PermGroup& G, int n);

struct MultRelation {
    bool controlled = false;
    std::optional<Rational> ratio;  // e_K / e_F when controlled and constant over the inertia type
    std::vector<std::string> class_labels;
    std::vector<std::optional<Rational>> per_class;  // empty optional where e_F = 0
};

MultRelation mult_relation(const PermGroup& G, int n, const Subgroup& H,
                           const std::vector<std::size_t>& inertia_classes);

}  // namespace cheb
