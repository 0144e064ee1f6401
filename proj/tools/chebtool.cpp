// chebtool: command-line front end for the cheb library.
//
// exit codes: 0 ok, 1 validation / fit / ramified prime, 2 cap exceeded, 3 internal,
// 64 usage (unknown flag, missing argument).

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cheb/classgroup.hpp"
#include "cheb/constants.hpp"
#include "cheb/fields.hpp"
#include "cheb/frobenius.hpp"
#include "cheb/heights.hpp"
#include "cheb/polyparse.hpp"
#include "cheb/ramcalc.hpp"
#include "cheb/report.hpp"
#include "cheb/sieve.hpp"

using namespace cheb;

namespace {

struct Global {
    int threads = 1;
    std::string out;
    u64 sieve_cap = kSieveCap;
    long long class_cap = kClassGroupCap;
    std::size_t group_cap = PermGroup::kDefaultCap;
};

Global g;
std::string preset_used;
std::map<std::string, std::string> constants_used;

void check_sieve(u64 x) {
    if (x > g.sieve_cap) throw CapError("x = " + std::to_string(x) + " exceeds sieve cap " + std::to_string(g.sieve_cap));
}
void check_class(long long X) {
    if (X > g.class_cap) throw CapError("|D| = " + std::to_string(X) + " exceeds class-group cap " + std::to_string(g.class_cap));
}

PermGroup group_for(const std::string& label) {
    PermGroup G = presets::by_label(label);
    if (G.order() > g.group_cap) throw CapError("group order exceeds cap");
    return G;
}

std::set<u64> parse_omega(const std::string& s) {
    std::set<u64> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        unsigned long long p = 0;
        try {
            p = std::stoull(tok, &pos);
        } catch (...) {
            throw ValidationError("bad --omega entry '" + tok + "'");
        }
        if (pos != tok.size() || !is_prime_u64(p)) throw ValidationError("--omega entries must be primes: '" + tok + "'");
        out.insert(p);
    }
    return out;
}

// "geometric:k" from lo to xmax, or an explicit comma list
std::vector<u64> parse_grid(const std::string& spec, u64 xmax, u64 lo) {
    std::vector<u64> grid;
    if (spec.rfind("geometric:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(spec.substr(10));
        } catch (...) {
            throw ValidationError("bad grid '" + spec + "'");
        }
        if (k < 1) throw ValidationError("grid needs k >= 1");
        if (k == 1) return {xmax};
        for (double x : geometric_grid(static_cast<double>(lo), static_cast<double>(xmax), k)) {
            u64 v = static_cast<u64>(std::llround(x));
            if (grid.empty() || v > grid.back()) grid.push_back(v);
        }
        grid.back() = xmax;
        return grid;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            grid.push_back(std::stoull(tok));
        } catch (...) {
            throw ValidationError("bad grid entry '" + tok + "'");
        }
        if (grid.size() > 1 && grid.back() <= grid[grid.size() - 2]) throw ValidationError("grid must be ascending");
    }
    if (grid.empty()) throw ValidationError("empty grid");
    return grid;
}

std::map<std::string, double> parse_kv(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& it : items) {
        auto eq = it.find('=');
        if (eq == std::string::npos) throw ValidationError("expected key=value, got '" + it + "'");
        out[it.substr(0, eq)] = to_double(parse_rational(it.substr(eq + 1)));
    }
    return out;
}

struct ConstFlags {
    std::string preset = "s3";
    std::string eps0, A;
    std::string c0, c1, c2, c5, c6, cq, csize;
};

void add_const_flags(CLI::App* sc, ConstFlags& f) {
    sc->add_option("--preset", f.preset, "family preset: s3 s4 c3 d5 a4");
    sc->add_option("--eps0", f.eps0, "epsilon_0 (rational)");
    sc->add_option("--A", f.A, "Chebotarev log power, >= 2");
    sc->add_option("--c0", f.c0, "C0 placeholder");
    sc->add_option("--c1", f.c1, "C1 placeholder");
    sc->add_option("--c2", f.c2, "C2 placeholder");
    sc->add_option("--c5", f.c5, "C5 placeholder");
    sc->add_option("--c6", f.c6, "C6 placeholder");
    sc->add_option("--cq", f.cq, "c_Q placeholder");
    sc->add_option("--class-size", f.csize, "|C| used in the audit");
}

FamilyConfig config_from(const ConstFlags& f) {
    FamilyConfig cfg = preset(f.preset);
    auto num = [](const std::string& s) { return to_double(parse_rational(s)); };
    if (!f.eps0.empty()) cfg.eps0 = parse_rational(f.eps0);
    if (!f.A.empty()) {
        Rational a = parse_rational(f.A);
        if (boost::multiprecision::denominator(a) != 1) throw ValidationError("--A must be an integer");
        cfg.A = boost::multiprecision::numerator(a).convert_to<long long>();
    }
    if (!f.c0.empty()) cfg.C0 = num(f.c0);
    if (!f.c1.empty()) cfg.C1 = num(f.c1);
    if (!f.c2.empty()) cfg.C2 = num(f.c2);
    if (!f.c5.empty()) cfg.C5 = num(f.c5);
    if (!f.c6.empty()) cfg.C6 = num(f.c6);
    if (!f.cq.empty()) cfg.cQ = num(f.cq);
    if (!f.csize.empty()) cfg.C_size = std::stoll(f.csize);
    cfg.validate();
    preset_used = cfg.name;
    constants_used = {{"C0", fmt_double(cfg.C0)}, {"C1", fmt_double(cfg.C1)}, {"C2", fmt_double(cfg.C2)},
                      {"C5", fmt_double(cfg.C5)}, {"C6", fmt_double(cfg.C6)}, {"cQ", fmt_double(cfg.cQ)},
                      {"eps0", to_string(cfg.eps0)}, {"A", std::to_string(cfg.A)}};
    return cfg;
}

void collect_flags(const CLI::App* app, const std::string& prefix, std::map<std::string, std::string>& out) {
    for (const CLI::Option* opt : app->get_options()) {
        const std::string name = opt->get_name();
        if (name == "--help" || name == "-h" || name == "--version") continue;
        std::string v;
        if (opt->count() > 0) {
            for (const auto& r : opt->results()) v += (v.empty() ? "" : ",") + r;
            if (opt->get_expected_min() == 0 && v.empty()) v = "true";
        } else {
            v = opt->get_default_str();
        }
        out[prefix + name] = v;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebotarev / number-field toolkit"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version());
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--out", g.out, "artifact path (relative paths go under $CHEB_OUT_DIR); stdout if omitted");
    app.add_option("--sieve-cap", g.sieve_cap, "largest x for prime sieving");
    app.add_option("--class-cap", g.class_cap, "largest |D| for class groups");
    app.add_option("--group-cap", g.group_cap, "largest permutation group order");

    std::function<std::string()> action;

    // group
    auto* grp = app.add_subcommand("group", "permutation group data");
    grp->require_subcommand(1);
    std::string glabel = "S3";
    auto* ginfo = grp->add_subcommand("info", "conjugacy classes as CSV");
    ginfo->add_option("--label", glabel, "S3 A4 D5 C6 F20 ...");
    ginfo->callback([&] { action = [&] { return group_csv(group_for(glabel)); }; });
    auto* gbr = grp->add_subcommand("bracket", "Malle exponent and discriminant-ratio bracket");
    gbr->add_option("--label", glabel, "group label");
    gbr->callback([&] {
        action = [&] {
            PermGroup G = group_for(glabel);
            auto b = disc_ratio_bounds(G, G.n());
            std::ostringstream os;
            os << "label,order,degree,malle_exponent,min_ratio,max_ratio,lower_bracket,upper_bracket,inside\n";
            os << glabel << ',' << G.order() << ',' << G.n() << ',' << to_string(G.malle_exponent()) << ','
               << to_string(b.min_ratio) << ',' << to_string(b.max_ratio) << ',' << to_string(b.lower_bracket) << ','
               << to_string(b.upper_bracket) << ',' << (b.inside ? "yes" : "no") << '\n';
            return os.str();
        };
    });

    // ramtable
    std::string rpreset = "a4", rformat = "csv";
    auto* ram = app.add_subcommand("ramtable", "exponent tables for tamely ramified primes");
    ram->add_option("--preset", rpreset, "s5 | sn:N | s4 | a4 | dp:P | c2p:P | d4");
    ram->add_option("--format", rformat, "csv | text")->check(CLI::IsMember({"csv", "text"}));
    ram->callback([&] {
        action = [&] {
            preset_used = rpreset;
            auto [p, param] = parse_ram_preset(rpreset);
            auto t = ram_table(p, param);
            return rformat == "csv" ? ram_table_csv(t) : ram_table_text(t);
        };
    });

    // fields
    auto* fld = app.add_subcommand("fields", "field enumeration and census");
    fld->require_subcommand(1);
    int fdegree = 3, fheight = 10, fp = 3, fgrid = 20, ffinger = 100;
    long long fbound = 10000;
    std::string fomega, fdb;
    bool fcomplete = false, fconductors = false;
    auto* fen = fld->add_subcommand("enumerate", "fields with square-free discriminant in a coefficient box");
    fen->add_option("--degree", fdegree, "2..5");
    fen->add_option("--disc-bound", fbound, "|D| bound");
    fen->add_option("--height", fheight, "coefficient box height");
    fen->add_option("--fingerprint", ffinger, "primes used to tell fields apart");
    fen->add_flag("--complete", fcomplete, "degree 3: every cubic field with |D| <= bound (Hunter search)");
    fen->callback([&] {
        action = [&] {
            if (fcomplete) {
                if (fdegree != 3) throw ValidationError("--complete is only available for degree 3");
                auto cs = cubic_fields_by_disc(-fbound, fbound, g.threads);
                if (!cs.complete) throw CapError("Hunter box did not cover the bound");
                return records_text(cs.fields);
            }
            return records_text(enumerate_squarefree_disc_fields(fdegree, fbound, fheight, ffinger, g.threads));
        };
    });
    auto* fcy = fld->add_subcommand("cyclic", "cyclic fields of prime degree by conductor");
    fcy->add_option("--p", fp, "3, 5 or 7");
    fcy->add_option("--disc-bound", fbound, "|D| bound");
    fcy->add_flag("--conductors", fconductors, "emit per-conductor counts instead of field records");
    fcy->callback([&] {
        action = [&] {
            auto r = cyclic_fields(fp, static_cast<long double>(fbound));
            return fconductors ? cyclic_csv(r) : records_text(r.fields);
        };
    });
    auto* fce = fld->add_subcommand("census", "counting function and log-log fit over a field database");
    fce->add_option("--db", fdb, "field database")->required();
    fce->add_option("--degree", fdegree, "keep records of this degree (0: all)");
    fce->add_option("--disc-bound", fbound, "top of the grid (0: largest |D| in the database)");
    fce->add_option("--grid", fgrid, "geometric grid points");
    fce->add_option("--omega", fomega, "comma-separated primes removed from D before counting multiplicities");
    fce->callback([&] {
        action = [&] {
            std::vector<FieldRecord> recs;
            bool height_limited = false;
            for (auto& r : read_records(fdb)) {
                if (fdegree != 0 && r.degree != fdegree) continue;
                if (fbound > 0 && r.abs_disc() > fbound) continue;
                if (r.degree >= 3 && std::find(r.tags.begin(), r.tags.end(), "sf-disc") != r.tags.end() &&
                    std::find(r.tags.begin(), r.tags.end(), "hunter") == r.tags.end())
                    height_limited = true;
                recs.push_back(std::move(r));
            }
            if (recs.empty()) throw FitError("no fields of degree " + std::to_string(fdegree) + " in " + fdb);
            double hi = fbound > 0 ? static_cast<double>(fbound) : 0;
            double lo = 1e300;
            for (const auto& r : recs) {
                double a = r.abs_disc().convert_to<double>();
                lo = std::min(lo, a);
                if (fbound <= 0) hi = std::max(hi, a);
            }
            if (!(hi > lo)) throw FitError("discriminant range too narrow for a fit");
            return census_csv(family_census(recs, geometric_grid(lo, hi, fgrid), parse_omega(fomega), height_limited));
        };
    });

    // cheb
    auto* chb = app.add_subcommand("cheb", "Frobenius statistics");
    chb->require_subcommand(1);
    std::string cpoly = "x^3-x-1", cgrid = "geometric:10", cgroup, cclass;
    u64 cxmax = 1000000, cp = 0;
    double csigma = 0.5;
    auto* crep = chb->add_subcommand("report", "pi_C(x) per cycle type against the density prediction");
    crep->add_option("--poly", cpoly, "defining polynomial");
    crep->add_option("--xmax", cxmax, "largest x");
    crep->add_option("--grid", cgrid, "geometric:k or a comma list");
    crep->add_option("--group", cgroup, "Galois group label (default: identified)");
    crep->callback([&] {
        action = [&] {
            check_sieve(cxmax);
            ZPoly f = parse_poly(cpoly);
            std::string label = cgroup.empty() ? galois_label(f).label : cgroup;
            auto grid = parse_grid(cgrid, cxmax, std::min<u64>(100, cxmax));
            check_sieve(grid.back());
            return cheb_csv(chebotarev_report(f, label, grid, g.threads));
        };
    });
    auto* cpi = chb->add_subcommand("pi", "count unramified primes with a given cycle type");
    cpi->add_option("--poly", cpoly, "defining polynomial");
    cpi->add_option("--x", cxmax, "bound");
    cpi->add_option("--class", cclass, "cycle type such as 2+1")->required();
    cpi->callback([&] {
        action = [&] {
            check_sieve(cxmax);
            ZPoly f = parse_poly(cpoly);
            std::ostringstream os;
            os << "x,class,count\n"
               << cxmax << ',' << cclass << ',' << pi_class(f, {parse_cycle_type(cclass)}, cxmax) << '\n';
            return os.str();
        };
    });
    auto* cpat = chb->add_subcommand("pattern", "factor degrees of f mod p");
    cpat->add_option("--poly", cpoly, "defining polynomial");
    cpat->add_option("--p", cp, "prime")->required();
    cpat->callback([&] {
        action = [&] {
            if (!is_prime_u64(cp)) throw ValidationError(std::to_string(cp) + " is not prime");
            ZPoly f = parse_poly(cpoly);
            return "p,pattern\n" + std::to_string(cp) + "," + cycle_type_label(frobenius_pattern(f, cp)) + "\n";
        };
    });
    auto* ccor = chb->add_subcommand("corollary", "split primes up to |D|^sigma and in the next dyadic range");
    ccor->add_option("--poly", cpoly, "defining polynomial");
    ccor->add_option("--sigma", csigma, "exponent in (0,1]");
    ccor->callback([&] {
        action = [&] {
            ZPoly f = parse_poly(cpoly);
            auto r = corollary_checks(f, csigma);
            std::ostringstream os;
            os << "bound,split_count,lower_target,dyadic_found,first_dyadic\n"
               << fmt_double(static_cast<double>(r.bound), 12) << ',' << r.split_count << ','
               << fmt_double(static_cast<double>(r.lower_target), 12) << ',' << (r.dyadic_found ? "yes" : "no") << ','
               << r.first_dyadic << '\n';
            return os.str();
        };
    });

    // torsion
    auto* tor = app.add_subcommand("torsion", "class groups of imaginary quadratic fields");
    tor->require_subcommand(1);
    long long tD = -23, tX = 1000, tl = 3;
    int tk = 1;
    bool tmoments = false;
    auto* tgr = tor->add_subcommand("group", "class group of one discriminant");
    tgr->add_option("--D", tD, "fundamental discriminant < 0");
    tgr->callback([&] {
        action = [&] {
            check_class(-tD);
            auto r = class_group(tD);
            std::string s = torsion_csv({r}, tl);
            s += "# forms";
            for (const auto& q : r.forms) s += " " + to_string(q);
            return s + "\n";
        };
    });
    tgr->add_option("--l", tl, "torsion prime");
    auto* tst = tor->add_subcommand("stats", "l-torsion over -X <= D < 0");
    tst->add_option("--X", tX, "discriminant bound");
    tst->add_option("--l", tl, "l");
    tst->add_option("--k", tk, "moment");
    tst->add_flag("--moments", tmoments, "emit the k-th moment summary instead of per-D rows");
    tst->callback([&] {
        action = [&] {
            check_class(tX);
            if (tl < 1 || tk < 1) throw ValidationError("l and k must be >= 1");
            if (tmoments) {
                auto s = torsion_stats(tX, tl, tk, g.threads);
                std::ostringstream os;
                os << "X,l,k,count,moment,exceptional\n"
                   << tX << ',' << tl << ',' << tk << ',' << s.count << ',' << s.moment << ',' << s.exceptional << '\n';
                return os.str();
            }
            std::vector<ClassGroupRecord> recs;
            for (long long D : fundamental_discriminants(tX)) recs.push_back(class_group(D));
            return torsion_csv(recs, tl);
        };
    });
    auto* tco = tor->add_subcommand("correspondence", "cubic fields of discriminant D against 3-torsion");
    tco->add_option("--X", tX, "discriminant bound");
    tco->callback([&] {
        action = [&] {
            check_class(tX);
            auto c = cubic_correspondence(tX, g.threads);
            if (!c.complete) throw CapError("cubic search did not reach the Hunter bound");
            return correspondence_csv(c);
        };
    });

    // constants
    auto* con = app.add_subcommand("constants", "explicit constants and thresholds");
    con->require_subcommand(1);
    ConstFlags cf;
    auto* crp = con->add_subcommand("report", "budget, parameters and thresholds for a family");
    add_const_flags(crp, cf);
    crp->callback([&] { action = [&] { return to_text(constants_report(config_from(cf))); }; });
    std::string bkind = "thmD";
    std::vector<std::string> bargs;
    auto* cbd = con->add_subcommand("bound", "evaluate one of the closed-form bounds");
    cbd->add_option("--kind", bkind, "thmA thmB thmD mprimes silverman thm15")
        ->check(CLI::IsMember({"thmA", "thmB", "thmD", "mprimes", "silverman", "thm15"}));
    cbd->add_option("--arg", bargs, "key=value, repeatable");
    cbd->callback([&] {
        action = [&] {
            return "kind,value\n" + bkind + "," + fmt_double(bound_eval(bkind, parse_kv(bargs)), 12) + "\n";
        };
    });
    double xmu = 5;
    auto* cx0 = con->add_subcommand("x0", "log x0 at mu = log log D_L");
    add_const_flags(cx0, cf);
    cx0->add_option("--mu", xmu, "log log D_L");
    cx0->callback([&] {
        action = [&] {
            auto cfg = config_from(cf);
            auto rep = constants_report(cfg);
            if (!rep.usable) throw ValidationError("delta outside the usable range for this configuration");
            double d = to_double(rep.delta);
            auto p = cheb_params(cfg, d, d);
            return "mu,log_x0\n" + fmt_double(xmu, 12) + "," + fmt_double(log_x0(p, xmu), 12) + "\n";
        };
    });

    // heights
    auto* hts = app.add_subcommand("heights", "Weil heights and small generators");
    hts->require_subcommand(1);
    std::string hpoly = "x^2-x-1", hdb;
    int hheight = 10;
    long long hlimit = 0;
    auto* hh = hts->add_subcommand("height", "height of the root of an irreducible polynomial");
    hh->add_option("--poly", hpoly, "minimal polynomial");
    hh->callback([&] {
        action = [&] { return "poly,H\n\"" + hpoly + "\"," + fmt_double(weil_height(parse_poly_big(hpoly)), 12) + "\n"; };
    });
    auto* hsg = hts->add_subcommand("smallgen", "least-height generator in a coefficient box");
    hsg->add_option("--db", hdb, "field database")->required();
    hsg->add_option("--height", hheight, "box height for the coefficients of alpha");
    hsg->add_option("--disc-bound", hlimit, "skip fields with larger |D| (0: none)");
    hsg->callback([&] {
        action = [&] {
            std::vector<SmallGenRow> rows;
            for (auto& r : read_records(hdb)) {
                if (hlimit > 0 && r.abs_disc() > hlimit) continue;
                if (r.degree < 2) continue;
                SmallGenRow row{r, small_generator(r, hheight, g.threads)};
                rows.push_back(std::move(row));
            }
            if (rows.empty()) throw ValidationError("no fields selected from " + hdb);
            return smallgen_csv(rows);
        };
    });

    // audit
    std::string apreset = "all";
    std::size_t asamples = 1000;
    std::uint64_t aseed = 1;
    auto* aud = app.add_subcommand("audit", "sampled check of every parameter inequality");
    ConstFlags af;
    af.preset = "all";
    add_const_flags(aud, af);
    aud->add_option("--samples", asamples, "samples per preset");
    aud->add_option("--seed", aseed, "sampler seed");
    aud->callback([&] {
        action = [&] {
            std::vector<std::string> names = af.preset == "all" || af.preset.empty() ? preset_names()
                                                                                       : std::vector<std::string>{af.preset};
            std::string out;
            bool ok = true;
            for (const auto& n : names) {
                ConstFlags one = af;
                one.preset = n;
                auto cfg = config_from(one);
                auto rep = constants_report(cfg);
                double d = to_double(rep.delta);
                auto a = envelope_audit(cfg, d, d, asamples, aseed, g.threads);
                std::string s = audit_csv(n, a);
                out += out.empty() ? s : s.substr(s.find('\n') + 1);
                ok = ok && a.passed();
                for (const auto& v : a.violations) std::cerr << n << ": " << v << '\n';
            }
            preset_used = af.preset.empty() ? "all" : af.preset;
            if (!ok) {
                std::cout << out;
                throw ValidationError("audit failed");
            }
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (!action) {
            std::cerr << "error: no command\n";
            return 64;
        }
        std::string data = action();
        if (g.out.empty()) {
            std::cout << data;
        } else {
            RunManifest m;
            std::string cmd;
            std::map<std::string, std::string> flags;
            collect_flags(&app, "", flags);
            for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
                sub = sub->get_subcommands().front();
                cmd += (cmd.empty() ? "" : " ") + sub->get_name();
                collect_flags(sub, sub->get_name() + ".", flags);
            }
            m.command = cmd;
            m.flags = flags;
            m.preset = preset_used;
            m.caps = {{"sieve", std::to_string(g.sieve_cap)},
                      {"class_group", std::to_string(g.class_cap)},
                      {"group_order", std::to_string(g.group_cap)},
                      {"class_table", std::to_string(kTableLimit)}};
            m.constants = constants_used;
            m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            write_artifact(g.out, data, m);
        }
        return 0;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const FitError& e) {
        std::cerr << "fit error: " << e.what() << '\n';
        return 1;
    } catch (const RamifiedPrimeError& e) {
        std::cerr << "ramified prime: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
