#include "cheb/report.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cheb {

namespace fs = std::filesystem;

std::string version() { return "0.1.0"; }

std::string resolve_out_path(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) {
        const char* dir = std::getenv(kOutDirEnv);
        if (dir && *dir) p = fs::path(dir) / p;
    }
    return p.string();
}

std::string manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["command"] = m.command;
    j["flags"] = m.flags;
    j["preset"] = m.preset;
    j["caps"] = m.caps;
    j["constants"] = m.constants;
    j["version"] = version();
    j["artifact"] = m.artifact;
    j["wall_seconds"] = m.wall_seconds;
    return j.dump(2) + "\n";
}

namespace {

void write_file(const fs::path& p, const std::string& data) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + p.string());
    out << data;
    if (!out) throw ValidationError("write failed: " + p.string());
}

std::string join(const std::vector<long long>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string divisors_field(const std::vector<long long>& d) { return d.empty() ? "1" : join(d, ';'); }

std::string ld(long double x) { return fmt_double(static_cast<double>(x), 12); }

}  // namespace

std::string write_artifact(const std::string& path, const std::string& data, RunManifest m) {
    const std::string resolved = resolve_out_path(path);
    write_file(resolved, data);
    m.artifact = fs::path(resolved).filename().string();
    write_file(resolved + ".manifest.json", manifest_json(m));
    return resolved;
}

std::string group_csv(const PermGroup& G) {
    std::ostringstream os;
    os << "class,cycle_type,size,order,representative\n";
    const auto& cls = G.conjugacy_classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& c = cls[i];
        std::string ct;
        for (std::size_t k = 0; k < c.cycle_type.size(); ++k) ct += (k ? "+" : "") + std::to_string(c.cycle_type[k]);
        os << i << ',' << ct << ',' << c.members.size() << ',' << c.representative.order() << ",\""
           << c.representative.cycle_string(1) << "\"\n";
    }
    return os.str();
}

std::string cheb_csv(const ChebStats& s) {
    std::ostringstream os;
    os << "x,class,count,main_term,normalized_error\n";
    for (std::size_t g = 0; g < s.grid.size(); ++g)
        for (std::size_t c = 0; c < s.classes.size(); ++c)
            os << s.grid[g] << ',' << cycle_type_label(s.classes[c].type) << ',' << s.counts[g][c] << ','
               << ld(s.main_term(g, c)) << ',' << ld(s.normalized_error(g, c)) << '\n';
    return os.str();
}

std::string torsion_csv(const std::vector<ClassGroupRecord>& groups, long long ell) {
    std::ostringstream os;
    os << "D,h,divisors,l_torsion\n";
    for (const auto& r : groups)
        os << r.D << ',' << r.h << ',' << divisors_field(r.divisors) << ',' << ell_torsion(r, ell) << '\n';
    return os.str();
}

std::string correspondence_csv(const Correspondence& c) {
    std::ostringstream os;
    os << "D,h,divisors,l_torsion,cubic_fields,predicted\n";
    for (const auto& row : c.rows) {
        auto r = class_group(row.D);
        os << row.D << ',' << row.h << ',' << divisors_field(r.divisors) << ',' << ell_torsion(r, 3) << ','
           << row.cubic_fields << ',' << row.predicted << '\n';
    }
    return os.str();
}

std::string census_csv(const CensusReport& r) {
    std::ostringstream os;
    os << "section,key,value\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i) os << "grid," << fmt_double(r.grid[i], 12) << ',' << r.counts[i] << '\n';
    os << "fit,exponent," << fmt_double(r.exponent, 12) << '\n';
    os << "fit,intercept," << fmt_double(r.intercept, 12) << '\n';
    os << "fit,residual," << fmt_double(r.residual, 12) << '\n';
    os << "fit,height_limited," << (r.height_limited ? "yes" : "no") << '\n';
    os << "fit,restricted," << (r.restricted ? "yes" : "no") << '\n';
    os << "multiplicity,distinct," << r.distinct << '\n';
    os << "multiplicity,max," << r.max_multiplicity << '\n';
    for (const auto& [m, n] : r.histogram) os << "histogram," << m << ',' << n << '\n';
    return os.str();
}

std::string cyclic_csv(const CyclicResult& r) {
    std::ostringstream os;
    os << "conductor,wild,omega,constructed,euler_coefficient,ratio\n";
    for (const auto& c : r.conductors)
        os << c.conductor << ',' << (c.wild ? 1 : 0) << ',' << c.omega << ',' << c.constructed << ','
           << c.euler_coefficient << ',' << to_string(c.ratio) << '\n';
    return os.str();
}

std::string records_text(const std::vector<FieldRecord>& records) {
    std::string s;
    for (const auto& r : records) s += to_record_line(r) + "\n";
    return s;
}

std::vector<FieldRecord> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open field database " + path);
    std::vector<FieldRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back(parse_record_line(line));
        } catch (const ValidationError& e) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string smallgen_csv(const std::vector<SmallGenRow>& rows) {
    std::ostringstream os;
    os << "disc,alpha_coeffs,H,bound,ok\n";
    for (const auto& row : rows) {
        const auto& r = row.result;
        std::string ok = !r.silverman_ok ? "violation" : (r.found && r.thm15_ok ? "yes" : "inconclusive");
        os << row.field.disc << ",\"" << join(r.alpha, ' ') << "\"," << (r.found ? fmt_double(r.H, 12) : "nan") << ','
           << fmt_double(r.bound, 12) << ',' << ok << '\n';
    }
    return os.str();
}

std::string audit_csv(const std::string& preset, const AuditReport& r) {
    std::ostringstream os;
    os << "preset,check,samples,failures\n";
    if (r.skipped) {
        os << preset << ",skipped," << r.samples << ",0\n";
        return os.str();
    }
    os << preset << ",all," << r.samples << ',';
    std::size_t total = 0;
    for (const auto& [k, v] : r.failures) total += v;
    os << total << '\n';
    for (const auto& [k, v] : r.failures) os << preset << ',' << k << ',' << r.samples << ',' << v << '\n';
    return os.str();
}

}  // namespace cheb
