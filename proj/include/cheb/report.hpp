#pragma once

#include <map>
#include <string>
#include <vector>

#include "cheb/classgroup.hpp"
#include "cheb/constants.hpp"
#include "cheb/fields.hpp"
#include "cheb/frobenius.hpp"
#include "cheb/heights.hpp"
#include "cheb/permgroup.hpp"

namespace cheb {

std::string version();

// Relative paths are taken under $CHEB_OUT_DIR when it is set.
constexpr const char* kOutDirEnv = "CHEB_OUT_DIR";
std::string resolve_out_path(const std::string& path);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> flags;
    std::string preset;
    std::map<std::string, std::string> caps;
    std::map<std::string, std::string> constants;
    std::string artifact;
    double wall_seconds = 0;
};

std::string manifest_json(const RunManifest& m);

// Writes `data` to `path` and the manifest next to it as <path>.manifest.json.
// Returns the resolved artifact path.
std::string write_artifact(const std::string& path, const std::string& data, RunManifest m);

std::string group_csv(const PermGroup& G);
std::string cheb_csv(const ChebStats& s);
std::string torsion_csv(const std::vector<ClassGroupRecord>& groups, long long ell);
std::string correspondence_csv(const Correspondence& c);
std::string census_csv(const CensusReport& r);
std::string cyclic_csv(const CyclicResult& r);
std::string records_text(const std::vector<FieldRecord>& records);
std::vector<FieldRecord> read_records(const std::string& path);

struct SmallGenRow {
    FieldRecord field;
    SmallGenResult result;
};
// disc,alpha_coeffs,H,bound,ok; ok is "yes", "inconclusive" (nothing under the bound
// within the search box) or "violation" (Silverman failed)
std::string smallgen_csv(const std::vector<SmallGenRow>& rows);

std::string audit_csv(const std::string& preset, const AuditReport& r);

}  // namespace cheb
