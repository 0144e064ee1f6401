#include "cheb/fields.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "cheb/cubic.hpp"
#include "cheb/roots.hpp"

namespace cheb {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// Runs body(i) for i in [0, n) on up to `threads` workers; each index is handled once.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t T = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::exception_ptr> errs(T);
    for (std::size_t t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += T) body(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace

std::string to_record_line(const FieldRecord& r) {
    std::string tags;
    for (std::size_t i = 0; i < r.tags.size(); ++i) {
        if (i) tags += ';';
        tags += r.tags[i];
    }
    return std::to_string(r.degree) + "|" + r.disc.str() + "|" + std::to_string(r.r1) + "," + std::to_string(r.r2) + "|" +
           r.label + "|" + coeff_string(r.poly) + "|" + tags;
}

FieldRecord parse_record_line(const std::string& line) {
    auto parts = split(line, '|');
    if (parts.size() != 6) throw ValidationError("field record needs 6 '|'-separated fields: " + line);
    FieldRecord r;
    try {
        r.degree = std::stoi(parts[0]);
        r.disc = BigInt(parts[1]);
        auto sig = split(parts[2], ',');
        if (sig.size() != 2) throw ValidationError("bad signature");
        r.r1 = std::stoi(sig[0]);
        r.r2 = std::stoi(sig[1]);
        r.label = parts[3];
        std::vector<long long> hi;
        for (const auto& c : split(parts[4], ',')) hi.push_back(std::stoll(c));
        r.poly = ZPoly::from_high(hi);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ValidationError("malformed field record: " + line);
    }
    if (!parts[5].empty()) r.tags = split(parts[5], ';');
    for (const auto& t : r.tags)
        if (t.rfind("conductor=", 0) == 0) r.conductor = std::stoll(t.substr(10));
    if (r.poly.degree() != r.degree || r.r1 + 2 * r.r2 != r.degree)
        throw ValidationError("inconsistent field record: " + line);
    return r;
}

bool record_less(const FieldRecord& a, const FieldRecord& b) {
    BigInt aa = a.abs_disc(), ab = b.abs_disc();
    if (aa != ab) return aa < ab;
    if (a.disc != b.disc) return a.disc < b.disc;
    return poly_less(a.poly, b.poly);
}

namespace {

std::vector<long long> integer_roots_monic_cubic(const BigPoly& R) {
    // R is monic and square-free; locate real roots numerically and confirm exactly.
    std::vector<long long> out;
    for (const auto& z : poly_roots(R)) {
        if (std::fabs(z.imag()) > 1e-6L * std::max(1.0L, std::abs(z))) continue;
        long double k = std::round(z.real());
        if (std::fabs(k) > 9e18L) continue;
        long long kk = static_cast<long long>(k);
        if (eval(R, BigInt(kk)) == 0 && std::find(out.begin(), out.end(), kk) == out.end()) out.push_back(kk);
    }
    return out;
}

bool square_in_quadratic(const BigInt& v, const BigInt& disc) {
    return v == 0 || is_square(v) || is_square(v * disc);
}

}  // namespace

GaloisLabel galois_label(const ZPoly& f) {
    const int n = f.degree();
    if (n < 2 || n > 5) throw ValidationError("galois_label supports degree 2..5");
    if (!is_irreducible(f)) throw ValidationError("galois_label: reducible polynomial " + to_string(f));
    if (n == 2) return {"C2", false};
    BigInt D = discriminant(f);
    if (n == 3) return {is_square(D) ? "C3" : "S3", false};
    if (n == 4) {
        if (!f.is_monic()) throw ValidationError("quartic labels need a monic polynomial");
        BigInt a = f[3], b = f[2], c = f[1], d = f[0];
        BigPoly R{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1};
        auto roots = integer_roots_monic_cubic(R);
        if (roots.empty()) return {is_square(D) ? "A4" : "S4", false};
        if (roots.size() == 3) return {"K4", false};
        BigInt r = roots[0];
        bool c4 = square_in_quadratic(r * r - 4 * d, D) && square_in_quadratic(a * a - 4 * (b - r), D);
        return {c4 ? "C4" : "D4", false};
    }
    // Degree 5: a (3,1,1) Frobenius pattern occurs only in A5 and S5 among the transitive
    // groups, so seeing one is conclusive; not seeing one in the sample is not.
    int seen = 0;
    for (u64 p = 2; seen < 200; ++p) {
        if (!is_prime_u64(p)) continue;
        auto pat = factor_degrees_mod_p(f, p);
        if (!pat) continue;
        ++seen;
        if (*pat == std::vector<int>{3, 1, 1}) return {is_square(D) ? "A5" : "S5", false};
    }
    return {"other(5)", true};
}

std::vector<std::vector<int>> frobenius_fingerprint(const ZPoly& f, const BigInt& avoid, int count) {
    std::vector<std::vector<int>> out;
    for (u64 p = 2; static_cast<int>(out.size()) < count; ++p) {
        if (!is_prime_u64(p)) continue;
        if (avoid % p == 0) continue;
        auto pat = factor_degrees_mod_p(f, p);
        if (!pat) continue;
        out.push_back(*pat);
    }
    return out;
}

bool same_fingerprint(const ZPoly& f, const ZPoly& g, int count) {
    if (f.degree() != g.degree()) return false;
    int used = 0;
    for (u64 p = 2; used < count; ++p) {
        if (!is_prime_u64(p)) continue;
        auto a = factor_degrees_mod_p(f, p);
        if (!a) continue;
        auto b = factor_degrees_mod_p(g, p);
        if (!b) continue;
        if (*a != *b) return false;
        ++used;
    }
    return true;
}

long long fundamental_part(long long D) {
    if (D == 0) throw ValidationError("fundamental_part of 0");
    long long sign = D < 0 ? -1 : 1;
    u64 core = 1;
    for (auto [p, e] : factor_u64(static_cast<u64>(D < 0 ? -D : D)))
        if (e % 2) core *= p;
    long long d0 = sign * static_cast<long long>(core);
    return ((d0 % 4) + 4) % 4 == 1 ? d0 : 4 * d0;
}

namespace {

FieldRecord make_record(const ZPoly& f, const BigInt& disc, std::vector<std::string> tags) {
    FieldRecord r;
    r.degree = f.degree();
    r.poly = f;
    r.disc = disc;
    r.r1 = real_root_count(f);
    r.r2 = (r.degree - r.r1) / 2;
    r.label = galois_label(f).label;
    r.tags = std::move(tags);
    return r;
}

}  // namespace

std::vector<FieldRecord> enumerate_squarefree_disc_fields(int n, long long X, int H, int fingerprint_len, int threads,
                                                          EnumerationStats* stats) {
    if (n < 2 || n > 5) throw ValidationError("enumeration supports degree 2..5");
    if (X < 3) throw ValidationError("disc bound must be >= 3");
    if (H < 1) throw ValidationError("height must be >= 1");
    EnumerationStats st;
    std::vector<FieldRecord> out;
    if (n == 2) {
        for (long long D = -X; D <= X; ++D) {
            if (!is_fundamental_discriminant(D)) continue;
            ++st.candidates;
            ZPoly f = (D % 4 == 0) ? ZPoly({-D / 4, 0, 1}) : ZPoly({(1 - D) / 4, -1, 1});
            std::vector<std::string> tags{"fundamental"};
            if (is_squarefree_u64(static_cast<u64>(D < 0 ? -D : D))) tags.push_back("sf-disc");
            out.push_back(make_record(f, D, tags));
            ++st.accepted;
        }
        std::sort(out.begin(), out.end(), record_less);
        if (stats) *stats = st;
        return out;
    }
    // Outer loop over a_{n-1}; inner odometer over the remaining coefficients.
    const std::size_t width = static_cast<std::size_t>(2 * H + 1);
    std::vector<std::vector<FieldRecord>> found(width);
    std::vector<std::size_t> cand(width, 0);
    parallel_for(width, threads, [&](std::size_t idx) {
        std::vector<long long> hi(static_cast<std::size_t>(n) + 1, -H);
        hi[0] = 1;
        hi[1] = static_cast<long long>(idx) - H;
        while (true) {
            ++cand[idx];
            if (hi[static_cast<std::size_t>(n)] != 0) {
                ZPoly f = ZPoly::from_high(hi);
                BigInt D = discriminant(f);
                if (D != 0 && boost::multiprecision::abs(D) <= X && is_squarefree(D) && is_irreducible(f))
                    found[idx].push_back(make_record(f, D, {"sf-disc"}));
            }
            int k = n;
            while (k >= 2 && hi[static_cast<std::size_t>(k)] == H) hi[static_cast<std::size_t>(k--)] = -H;
            if (k < 2) break;
            ++hi[static_cast<std::size_t>(k)];
        }
    });
    std::vector<FieldRecord> all;
    for (std::size_t i = 0; i < width; ++i) {
        st.candidates += cand[i];
        for (auto& r : found[i]) all.push_back(std::move(r));
    }
    st.accepted = all.size();
    std::sort(all.begin(), all.end(), record_less);
    // Dedup within equal discriminants. For square-free discriminants the polynomial
    // discriminant is the field discriminant, so the excluded primes agree.
    std::vector<std::vector<std::vector<int>>> prints(all.size());
    parallel_for(all.size(), threads, [&](std::size_t i) { prints[i] = frobenius_fingerprint(all[i].poly, all[i].disc, fingerprint_len); });
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        while (j < all.size() && all[j].disc == all[i].disc) ++j;
        std::vector<std::size_t> kept;
        for (std::size_t k = i; k < j; ++k) {
            bool dup = false;
            for (auto q : kept)
                if (prints[q] == prints[k]) {
                    dup = true;
                    break;
                }
            if (dup) {
                ++st.duplicates;
            } else {
                kept.push_back(k);
                out.push_back(all[k]);
            }
        }
        i = j;
    }
    if (stats) *stats = st;
    return out;
}

CubicSearch cubic_fields_by_disc(long long lo, long long hi, int threads) {
    if (lo > hi) throw ValidationError("empty discriminant range");
    const long double Dmax = static_cast<long double>(std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi));
    // Hunter: some theta in O_K \ Z has Tr in {0,1} and T2 <= Tr^2/3 + sqrt(4/3) sqrt(|D|/3).
    const long double B = 1.0L / 3 + std::sqrt(4.0L / 3) * std::sqrt(Dmax / 3);
    const long long bmax = static_cast<long long>(std::floor((1 + B) / 2)) + 1;
    const long long cmax = static_cast<long long>(std::floor(std::pow(B / 3, 1.5L))) + 1;
    CubicSearch res;
    std::vector<FieldRecord> kept;
    int H = 4;
    while (true) {
        const long long bl = std::min<long long>(H, bmax), cl = std::min<long long>(H, cmax);
        const std::size_t nb = static_cast<std::size_t>(2 * bl + 1);
        std::vector<std::vector<FieldRecord>> found(nb);
        parallel_for(nb, threads, [&](std::size_t idx) {
            long long b = static_cast<long long>(idx) - bl;
            for (long long a : {-1LL, 0LL, 1LL})
                for (long long c = -cl; c <= cl; ++c) {
                    if (c == 0) continue;
                    ZPoly f({c, b, a, 1});
                    BigInt pd = discriminant(f);
                    if (pd == 0) continue;
                    if (!is_irreducible(f)) continue;
                    BigInt DK = cubic_field_discriminant(f);
                    if (DK < lo || DK > hi) continue;
                    std::vector<std::string> tags{"hunter"};
                    if (pd == DK) tags.push_back("monogenic-poly");
                    if (is_squarefree(DK)) tags.push_back("sf-disc");
                    FieldRecord r;
                    r.degree = 3;
                    r.poly = f;
                    r.disc = DK;
                    r.r1 = DK > 0 ? 3 : 1;
                    r.r2 = DK > 0 ? 0 : 1;
                    r.label = is_square(DK) ? "C3" : "S3";
                    r.tags = std::move(tags);
                    found[idx].push_back(std::move(r));
                }
        });
        std::vector<FieldRecord> all;
        for (auto& v : found)
            for (auto& r : v) all.push_back(std::move(r));
        std::sort(all.begin(), all.end(), record_less);
        kept.clear();
        std::size_t i = 0;
        while (i < all.size()) {
            std::size_t j = i;
            while (j < all.size() && all[j].disc == all[i].disc) ++j;
            std::size_t start = kept.size();
            for (std::size_t k = i; k < j; ++k) {
                bool dup = false;
                for (std::size_t q = start; q < kept.size(); ++q)
                    if (same_fingerprint(kept[q].poly, all[k].poly, 100)) {
                        dup = true;
                        break;
                    }
                if (!dup) kept.push_back(all[k]);
            }
            i = j;
        }
        res.heights.push_back(H);
        res.counts.push_back(kept.size());
        const bool covered = bl == bmax && cl == cmax;
        if (covered) {
            res.complete = true;
            break;
        }
        H *= 2;
    }
    res.stable = res.counts.size() >= 2 && res.counts[res.counts.size() - 1] == res.counts[res.counts.size() - 2];
    res.fields = std::move(kept);
    return res;
}

namespace {

struct LocalFactor {
    long long modulus;  // q or p^2
    long long gen;
    std::vector<int> dlog;  // dlog[a] mod p, for a in [0, modulus), -1 if not a unit
};

LocalFactor local_factor(long long m, int p, bool prime_power) {
    LocalFactor L;
    L.modulus = m;
    long long q = prime_power ? p : m;
    long long g = static_cast<long long>(primitive_root(static_cast<u64>(q)));
    if (prime_power && powmod(static_cast<u64>(g), static_cast<u64>(p - 1), static_cast<u64>(m)) == 1) g += q;
    L.gen = g;
    L.dlog.assign(static_cast<std::size_t>(m), -1);
    long long x = 1;
    long long order = prime_power ? static_cast<long long>(p) * (p - 1) : m - 1;
    for (long long k = 0; k < order; ++k) {
        L.dlog[static_cast<std::size_t>(x)] = static_cast<int>(k % p);
        x = x * g % m;
    }
    return L;
}

std::vector<LocalFactor> local_factors(int p, long long f) {
    std::vector<LocalFactor> out;
    long long rest = f;
    if (f % (static_cast<long long>(p) * p) == 0) {
        out.push_back(local_factor(static_cast<long long>(p) * p, p, true));
        rest /= static_cast<long long>(p) * p;
    }
    for (auto [q, e] : factor_u64(static_cast<u64>(rest))) {
        if (e != 1 || q % static_cast<u64>(p) != 1) throw ValidationError("conductor must be a square-free product of primes 1 mod p, optionally times p^2");
        out.push_back(local_factor(static_cast<long long>(q), p, false));
    }
    std::sort(out.begin(), out.end(), [](const LocalFactor& a, const LocalFactor& b) { return a.modulus < b.modulus; });
    return out;
}

template <class T>
struct Arith;

template <>
struct Arith<i128> {
    static bool add(i128& x, i128 y) { return !add_ovf(x, y, x); }
    static bool mul(i128 x, i128 y, i128& r) { return !mul_ovf(x, y, r); }
};

template <>
struct Arith<BigInt> {
    static bool add(BigInt& x, const BigInt& y) {
        x += y;
        return true;
    }
    static bool mul(const BigInt& x, const BigInt& y, BigInt& r) {
        r = x * y;
        return true;
    }
};

// Checks that g(P0(y)) vanishes mod Phi_f(y), i.e. g(eta_0) = 0 exactly. Returns
// nullopt on int128 overflow.
template <class T>
std::optional<bool> period_relation_holds(const ZPoly& g, const std::vector<long long>& P0, long long f, const BigPoly& phi) {
    const std::size_t F = static_cast<std::size_t>(f);
    std::vector<T> R(F, T(0));
    for (int i = g.degree(); i >= 0; --i) {
        std::vector<T> nx(F, T(0));
        if (i != g.degree()) {
            for (std::size_t k = 0; k < F; ++k) {
                if (R[k] == 0) continue;
                for (long long a : P0) {
                    std::size_t j = (k + static_cast<std::size_t>(a)) % F;
                    if (!Arith<T>::add(nx[j], R[k])) return std::nullopt;
                }
            }
        }
        if (!Arith<T>::add(nx[0], T(g[i]))) return std::nullopt;
        R = std::move(nx);
    }
    const std::size_t dphi = phi.size() - 1;
    std::vector<T> ph;
    for (const auto& c : phi) {
        if constexpr (std::is_same_v<T, i128>) {
            if (boost::multiprecision::abs(c) > BigInt(INT64_MAX)) return std::nullopt;
            ph.push_back(static_cast<i128>(c.convert_to<long long>()));
        } else {
            ph.push_back(c);
        }
    }
    for (std::size_t i = F; i-- > dphi;) {
        T t = R[i];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dphi; ++j) {
            T prod;
            if (!Arith<T>::mul(t, ph[j], prod)) return std::nullopt;
            if (!Arith<T>::add(R[i - dphi + j], T(-prod))) return std::nullopt;
        }
    }
    for (std::size_t i = 0; i < dphi; ++i)
        if (R[i] != 0) return false;
    return true;
}

}  // namespace

ZPoly gaussian_period_poly(int p, long long f, const std::vector<int>& exps) {
    auto locals = local_factors(p, f);
    if (exps.size() != locals.size()) throw ValidationError("one character exponent per local factor required");
    for (int j : exps)
        if (j <= 0 || j >= p) throw ValidationError("character exponents must lie in 1..p-1");
    // Coset label of each unit a: sum of exponent * dlog mod p.
    constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;
    std::vector<long double> eta(static_cast<std::size_t>(p), 0);
    std::vector<long long> P0;
    for (long long a = 1; a < f; ++a) {
        if (std::gcd(a, f) != 1) continue;
        long long v = 0;
        for (std::size_t i = 0; i < locals.size(); ++i)
            v += static_cast<long long>(exps[i]) * locals[i].dlog[static_cast<std::size_t>(a % locals[i].modulus)];
        v %= p;
        eta[static_cast<std::size_t>(v)] += std::cos(kTwoPi * static_cast<long double>(a) / static_cast<long double>(f));
        if (v == 0) P0.push_back(a);
    }
    // prod (x - eta_v)
    std::vector<long double> co{1};
    for (long double e : eta) {
        std::vector<long double> nx(co.size() + 1, 0);
        for (std::size_t i = 0; i < co.size(); ++i) {
            nx[i + 1] += co[i];
            nx[i] -= e * co[i];
        }
        co = std::move(nx);
    }
    std::vector<long long> ic;
    for (long double c : co) {
        long double r = std::round(c);
        if (std::fabs(c - r) > 1e-6L)
            throw ConstructionError("conductor " + std::to_string(f) + ": period polynomial coefficient not near an integer");
        ic.push_back(static_cast<long long>(r));
    }
    ZPoly g(ic);
    BigPoly phi = cyclotomic(static_cast<int>(f));
    auto ok = period_relation_holds<i128>(g, P0, f, phi);
    if (!ok) ok = period_relation_holds<BigInt>(g, P0, f, phi);
    if (!*ok) throw ConstructionError("conductor " + std::to_string(f) + ": period relation fails exact check");
    return g;
}

CyclicResult cyclic_fields(int p, long double X) {
    if (p != 3 && p != 5 && p != 7) throw ValidationError("cyclic_fields supports p in {3,5,7}");
    if (!(X >= 1)) throw ValidationError("disc bound must be >= 1");
    long long fmax = static_cast<long long>(std::floor(std::pow(X, 1.0L / (p - 1)))) + 1;
    auto fits = [&](long long f) { return std::pow(static_cast<long double>(f), static_cast<long double>(p - 1)) <= X * (1 + 1e-15L); };
    while (fmax > 0 && !fits(fmax)) --fmax;
    if (fmax > 2000000) throw CapError("cyclic_fields: conductor range beyond cap");
    std::vector<long long> qs;
    for (u64 q : primes_up_to(static_cast<u64>(std::max<long long>(fmax, 2))))
        if (q % static_cast<u64>(p) == 1) qs.push_back(static_cast<long long>(q));
    std::vector<long long> conductors;
    std::function<void(std::size_t, long long)> dfs = [&](std::size_t start, long long f) {
        for (long long base : {1LL, static_cast<long long>(p) * p})
            if (f * base > 1 && f * base <= fmax) conductors.push_back(f * base);
        for (std::size_t i = start; i < qs.size(); ++i) {
            if (f * qs[i] > fmax) break;
            dfs(i + 1, f * qs[i]);
        }
    };
    dfs(0, 1);
    std::sort(conductors.begin(), conductors.end());
    conductors.erase(std::unique(conductors.begin(), conductors.end()), conductors.end());

    CyclicResult res;
    res.p = p;
    res.X = X;
    for (long long f : conductors) {
        auto locals = local_factors(p, f);
        const bool wild = f % (static_cast<long long>(p) * p) == 0;
        const int k = static_cast<int>(locals.size());
        ConductorRow row;
        row.conductor = f;
        row.wild = wild;
        row.omega = wild ? k - 1 : k;
        // Exponent vectors with the first entry normalized to 1: one per field.
        std::vector<int> exps(static_cast<std::size_t>(k), 1);
        const BigInt Dk = boost::multiprecision::pow(BigInt(f), static_cast<unsigned>(p - 1));
        while (true) {
            ZPoly g = gaussian_period_poly(p, f, exps);
            BigInt pd = discriminant(g);
            if (pd % Dk != 0 || !is_square(pd / Dk))
                throw ConstructionError("conductor " + std::to_string(f) + ": polynomial discriminant is not f^(p-1) times a square");
            if (p == 3 && cubic_field_discriminant(g) != Dk)
                throw ConstructionError("conductor " + std::to_string(f) + ": field discriminant differs from f^2");
            FieldRecord r;
            r.degree = p;
            r.poly = g;
            r.disc = Dk;
            r.r1 = p;
            r.r2 = 0;
            r.label = "C" + std::to_string(p);
            r.conductor = f;
            r.tags = {"cyclic-p", "conductor=" + std::to_string(f)};
            if (wild) r.tags.push_back("wild");
            res.fields.push_back(std::move(r));
            ++row.constructed;
            int pos = k - 1;
            while (pos >= 1 && exps[static_cast<std::size_t>(pos)] == p - 1) exps[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 1) break;
            ++exps[static_cast<std::size_t>(pos)];
        }
        row.euler_coefficient = 1;
        for (int i = 0; i < row.omega; ++i) row.euler_coefficient *= p - 1;
        row.ratio = Rational(row.euler_coefficient, row.constructed);
        res.conductors.push_back(row);
    }
    std::sort(res.fields.begin(), res.fields.end(), record_less);
    return res;
}

std::vector<double> geometric_grid(double lo, double hi, int k) {
    if (!(lo > 0) || !(hi >= lo) || k < 1) throw ValidationError("geometric grid needs 0 < lo <= hi and k >= 1");
    std::vector<double> g;
    if (k == 1) return {hi};
    for (int i = 0; i < k; ++i) g.push_back(i == k - 1 ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / (k - 1)));
    return g;
}

BigInt restricted_disc(const BigInt& D, const std::set<u64>& omega) {
    BigInt m = boost::multiprecision::abs(D);
    for (u64 p : omega) {
        if (p < 2) continue;
        while (m != 0 && m % p == 0) m /= p;
    }
    return m;
}

CensusReport family_census(const std::vector<FieldRecord>& records, const std::vector<double>& grid,
                           const std::set<u64>& omega, bool height_limited) {
    if (records.empty()) throw FitError("census of an empty family");
    CensusReport rep;
    rep.grid = grid;
    rep.height_limited = height_limited;
    rep.restricted = !omega.empty();
    std::vector<long double> ad;
    for (const auto& r : records) ad.push_back(r.abs_disc().convert_to<long double>());
    std::sort(ad.begin(), ad.end());
    std::vector<double> xs, ys;
    for (double X : grid) {
        long long n = static_cast<long long>(std::upper_bound(ad.begin(), ad.end(), static_cast<long double>(X)) - ad.begin());
        rep.counts.push_back(n);
        if (n > 0) {
            xs.push_back(std::log(X));
            ys.push_back(std::log(static_cast<double>(n)));
        }
    }
    if (xs.size() < 3) throw FitError("fewer than 3 grid points with nonzero counts");
    const double N = static_cast<double>(xs.size());
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / N, my = std::accumulate(ys.begin(), ys.end(), 0.0) / N;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) throw FitError("degenerate grid");
    rep.exponent = sxy / sxx;
    rep.intercept = my - rep.exponent * mx;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (rep.intercept + rep.exponent * xs[i]);
        ss += e * e;
    }
    rep.residual = std::sqrt(ss / N);
    std::map<BigInt, long long> mult;
    for (const auto& r : records) ++mult[omega.empty() ? r.abs_disc() : restricted_disc(r.disc, omega)];
    for (const auto& [d, m] : mult) {
        ++rep.histogram[m];
        rep.max_multiplicity = std::max(rep.max_multiplicity, m);
    }
    rep.distinct = mult.size();
    return rep;
}

}  // namespace cheb
