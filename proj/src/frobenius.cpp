#include "cheb/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cheb/fields.hpp"

namespace cheb {

CycleType frobenius_pattern(const ZPoly& f, u64 p) {
    if (!is_prime_u64(p)) throw ValidationError(std::to_string(p) + " is not prime");
    auto pat = factor_degrees_mod_p(f, p);
    if (!pat) throw RamifiedPrimeError(std::to_string(p) + " divides the discriminant of " + to_string(f));
    return *pat;
}

std::string cycle_type_label(const CycleType& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(t[i]);
    }
    return s;
}

CycleType parse_cycle_type(const std::string& s) {
    CycleType t;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ValidationError("bad cycle type '" + s + "'");
        int v = std::stoi(cur);
        if (v < 1) throw ValidationError("bad cycle type '" + s + "'");
        t.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == '+' || c == ',' || c == ' ') {
            flush();
        } else if (c >= '0' && c <= '9') {
            cur += c;
        } else {
            throw ValidationError("bad cycle type '" + s + "'");
        }
    }
    flush();
    std::sort(t.rbegin(), t.rend());
    return t;
}

long double li(long double x) {
    if (x < 2) throw ValidationError("li defined here for x >= 2");
    if (x == 2) return 0;
    auto f = [](long double u) { return std::exp(u) / u; };
    long double a = std::log(2.0L), b = std::log(x);
    // Integrate piecewise on unit u-intervals so each panel stays well conditioned.
    long double total = 0;
    for (long double lo = a; lo < b; lo += 1) {
        long double hi = std::min(b, lo + 1);
        total += boost::math::quadrature::gauss_kronrod<long double, 31>::integrate(f, lo, hi, 15, 1e-15L);
    }
    return total;
}

PermGroup galois_group_for(const std::string& label) {
    if (label == "C2") return presets::cyclic(2);
    if (label == "C3") return presets::cyclic(3);
    if (label == "S3") return presets::symmetric(3);
    if (label == "C4") return presets::cyclic(4);
    if (label == "K4" || label == "V4") return presets::klein4();
    if (label == "D4") return presets::dihedral(4);
    if (label == "A4") return presets::alternating(4);
    if (label == "S4") return presets::symmetric(4);
    if (label == "C5") return presets::cyclic(5);
    if (label == "D5") return presets::dihedral(5);
    if (label == "F20") return presets::frobenius20();
    if (label == "A5") return presets::alternating(5);
    if (label == "S5" || label == "other(5)") return presets::symmetric(5);
    throw ValidationError("unknown Galois label '" + label + "'");
}

std::vector<std::pair<CycleType, std::size_t>> realized_cycle_types(const PermGroup& G) {
    std::map<CycleType, std::size_t> m;
    for (const auto& c : G.conjugacy_classes()) m[c.cycle_type] += c.members.size();
    return {m.begin(), m.end()};
}

namespace {

std::string resolve_label(const ZPoly& f, const std::string& label) {
    return label.empty() ? galois_label(f).label : label;
}

}  // namespace

long long pi_class(const ZPoly& f, const std::vector<CycleType>& types, u64 x, const std::string& group_label) {
    if (types.empty()) throw ValidationError("empty class specification");
    const auto G = galois_group_for(resolve_label(f, group_label));
    auto real = realized_cycle_types(G);
    for (const auto& t : types) {
        bool ok = std::any_of(real.begin(), real.end(), [&](const auto& r) { return r.first == t; });
        if (!ok) throw ValidationError("cycle type " + cycle_type_label(t) + " does not occur in " + G.name());
    }
    long long n = 0;
    for_each_prime(2, x, [&](u64 p) {
        auto pat = factor_degrees_mod_p(f, p);
        if (!pat) return;
        if (std::find(types.begin(), types.end(), *pat) != types.end()) ++n;
    });
    return n;
}

long double ChebStats::main_term(std::size_t gi, std::size_t ci) const {
    return static_cast<long double>(classes[ci].weight) * li[gi];
}

long double ChebStats::normalized_error(std::size_t gi, std::size_t ci) const {
    long double x = static_cast<long double>(grid[gi]);
    long double L = std::log(x);
    return (static_cast<long double>(counts[gi][ci]) - main_term(gi, ci)) / (x / (L * L));
}

long double ChebStats::ratio(std::size_t gi, std::size_t ci) const {
    long double m = main_term(gi, ci);
    return m == 0 ? 0 : static_cast<long double>(counts[gi][ci]) / m;
}

bool ChebStats::sum_identity_holds(std::size_t gi) const {
    long long s = ramified[gi];
    for (long long c : counts[gi]) s += c;
    return s == pi[gi];
}

ChebStats chebotarev_report(const ZPoly& f, const std::string& group_label, const std::vector<u64>& grid, int threads) {
    if (grid.empty()) throw ValidationError("empty x grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 2) throw ValidationError("grid points must be >= 2");
        if (i && grid[i] <= grid[i - 1]) throw ValidationError("grid must be strictly ascending");
    }
    if (grid.back() > kSieveCap) throw CapError("x beyond sieve cap " + std::to_string(kSieveCap));
    ChebStats st;
    st.group = resolve_label(f, group_label);
    const auto G = galois_group_for(st.group);
    if (G.n() != f.degree()) throw ValidationError("group degree does not match polynomial degree");
    st.group_order = G.order();
    std::map<CycleType, std::size_t> class_count;
    for (const auto& c : G.conjugacy_classes()) ++class_count[c.cycle_type];
    for (const auto& [t, sz] : realized_cycle_types(G)) {
        ChebClass c;
        c.type = t;
        c.size = sz;
        c.weight = static_cast<double>(sz) / static_cast<double>(G.order());
        c.merged = class_count[t] > 1;
        st.classes.push_back(c);
    }
    std::map<CycleType, std::size_t> index;
    for (std::size_t i = 0; i < st.classes.size(); ++i) index[st.classes[i].type] = i;
    st.grid = grid;

    // Patterns are computed block-parallel over the prime list, then merged in order.
    const auto primes = primes_in(2, grid.back());
    std::vector<int> cls(primes.size(), -1);  // -1: divides the discriminant
    const std::size_t T = static_cast<std::size_t>(std::max(1, threads));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(T);
    auto work = [&](std::size_t t) {
        try {
            for (std::size_t i = t; i < primes.size(); i += T) {
                auto pat = factor_degrees_mod_p(f, primes[i]);
                if (!pat) continue;
                auto it = index.find(*pat);
                if (it == index.end())
                    throw ValidationError("consistency: pattern " + cycle_type_label(*pat) + " at p=" + std::to_string(primes[i]) +
                                          " impossible for " + st.group);
                cls[i] = static_cast<int>(it->second);
            }
        } catch (...) {
            errs[t] = std::current_exception();
        }
    };
    if (T == 1) {
        work(0);
    } else {
        for (std::size_t t = 0; t < T; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    std::vector<long long> cur(st.classes.size(), 0);
    long long ram = 0;
    std::size_t gi = 0;
    for (std::size_t i = 0; i <= primes.size(); ++i) {
        while (gi < grid.size() && (i == primes.size() || primes[i] > grid[gi])) {
            st.counts.push_back(cur);
            st.ramified.push_back(ram);
            st.pi.push_back(static_cast<long long>(prime_pi_simple(grid[gi])));
            st.li.push_back(li(static_cast<long double>(grid[gi])));
            ++gi;
        }
        if (i == primes.size()) break;
        if (cls[i] < 0)
            ++ram;
        else
            ++cur[static_cast<std::size_t>(cls[i])];
    }
    return st;
}

CorollaryResult corollary_checks(const ZPoly& f, double sigma) {
    if (!(sigma > 0) || sigma > 1) throw ValidationError("sigma must lie in (0, 1]");
    const BigInt D = boost::multiprecision::abs(discriminant(f));
    CorollaryResult r;
    r.bound = std::pow(D.convert_to<long double>(), static_cast<long double>(sigma));
    if (2 * r.bound > static_cast<long double>(kSieveCap)) throw CapError("2|D|^sigma exceeds sieve cap");
    r.lower_target = r.bound > 1 ? r.bound / std::log(r.bound) : 0;
    const u64 B = static_cast<u64>(std::floor(r.bound));
    const u64 B2 = static_cast<u64>(std::floor(2 * r.bound));
    const CycleType split(static_cast<std::size_t>(f.degree()), 1);
    for_each_prime(2, B2, [&](u64 p) {
        auto pat = factor_degrees_mod_p(f, p);
        if (!pat || *pat != split) return;
        if (p <= B) {
            ++r.split_count;
        } else if (!r.dyadic_found && static_cast<long double>(p) > r.bound) {
            r.dyadic_found = true;
            r.first_dyadic = p;
        }
    });
    return r;
}

}  // namespace cheb
