#include "cheb/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "cheb/fields.hpp"

namespace cheb {

namespace {

struct Egcd {
    i128 g, x, y;
};

Egcd egcd(i128 a, i128 b) {
    i128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i128 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 pos_mod(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::string to_string(const QForm& f) {
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

long long form_disc(const QForm& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_reduced(const QForm& f) {
    long long ab = f.b < 0 ? -f.b : f.b;
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QForm reduce(QForm f) {
    if (f.a <= 0) throw ValidationError("reduce: form must be positive definite");
    const i128 D = static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
    i128 a = f.a, b = f.b, c = f.c;
    auto normalize = [&] {
        // b into (-a, a]
        i128 r = floor_div(a - b, 2 * a);
        b += 2 * a * r;
        c = (b * b - D) / (4 * a);
    };
    normalize();
    while (true) {
        if (a > c) {
            std::swap(a, c);
            b = -b;
            normalize();
            continue;
        }
        if (a == c && b < 0) b = -b;
        break;
    }
    return {static_cast<long long>(a), static_cast<long long>(b), static_cast<long long>(c)};
}

QForm identity_form(long long D) {
    if (D >= 0 || (((D % 4) + 4) % 4 > 1)) throw ValidationError("discriminant must be negative and 0 or 1 mod 4");
    if (D % 4 == 0) return {1, 0, -D / 4};
    return {1, 1, (1 - D) / 4};
}

QForm inverse(const QForm& f) { return reduce({f.a, -f.b, f.c}); }

QForm compose(const QForm& f, const QForm& g) {
    const i128 D = static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
    if (D != static_cast<i128>(g.b) * g.b - static_cast<i128>(4) * g.a * g.c) throw ValidationError("compose: discriminants differ");
    const i128 a1 = f.a, b1 = f.b, a2 = g.a, b2 = g.b;
    const i128 s = (b1 + b2) / 2;
    // e = gcd(a1, a2, s) = u a1 + v a2 + w s
    Egcd g1 = egcd(a1, a2);
    Egcd g2 = egcd(g1.g, s);
    const i128 e = g2.g, u = g2.x * g1.x, v = g2.x * g1.y, w = g2.y;
    const i128 a3 = a1 * a2 / (e * e);
    const i128 num = u * a1 * b2 + v * a2 * b1 + w * ((b1 * b2 + D) / 2);
    const i128 B = pos_mod(num / e, 2 * a3);
    const i128 c3 = (B * B - D) / (4 * a3);
    if ((B * B - D) % (4 * a3) != 0) throw std::logic_error("compose: non-integral c");
    return reduce({static_cast<long long>(a3), static_cast<long long>(B), static_cast<long long>(c3)});
}

std::vector<QForm> reduced_forms(long long D) {
    if (D >= 0) throw ValidationError("reduced_forms needs D < 0");
    std::vector<QForm> out;
    const long long amax = static_cast<long long>(std::sqrt(static_cast<long double>(-D) / 3.0L)) + 1;
    for (long long a = 1; a <= amax; ++a)
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            QForm q{a, b, c};
            if (is_reduced(q) && std::gcd(std::gcd(a, b < 0 ? -b : b), c) == 1) out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Invariant factors from, for each prime q | h, the counts N_k = #{g : g^(q^k) = 1}.
std::vector<long long> invariant_factors(const std::vector<long long>& orders, long long h) {
    std::vector<std::vector<int>> per_prime;  // exponents of cyclic q-factors, descending
    std::vector<long long> primes;
    for (auto [q, e] : factor_u64(static_cast<u64>(h))) {
        std::vector<long long> N{1};
        long long qk = 1;
        for (int k = 1; k <= e; ++k) {
            qk *= static_cast<long long>(q);
            long long n = 0;
            for (long long o : orders)
                if (qk % o == 0) ++n;
            N.push_back(n);
        }
        // rank_k = number of factors with exponent >= k = log_q(N_k / N_{k-1})
        std::vector<int> ge;
        for (int k = 1; k <= e; ++k) {
            long long ratio = N[static_cast<std::size_t>(k)] / N[static_cast<std::size_t>(k - 1)];
            int r = 0;
            while (ratio > 1) {
                ratio /= static_cast<long long>(q);
                ++r;
            }
            ge.push_back(r);
        }
        std::vector<int> ex;  // exponents, descending
        for (int k = e; k >= 1; --k) {
            int cnt = ge[static_cast<std::size_t>(k - 1)] - (k < e ? ge[static_cast<std::size_t>(k)] : 0);
            for (int i = 0; i < cnt; ++i) ex.push_back(k);
        }
        per_prime.push_back(ex);
        primes.push_back(static_cast<long long>(q));
    }
    std::size_t rank = 0;
    for (const auto& ex : per_prime) rank = std::max(rank, ex.size());
    std::vector<long long> d(rank, 1);
    for (std::size_t i = 0; i < per_prime.size(); ++i)
        for (std::size_t j = 0; j < per_prime[i].size(); ++j) {
            long long pk = 1;
            for (int t = 0; t < per_prime[i][j]; ++t) pk *= primes[i];
            d[rank - 1 - j] *= pk;
        }
    return d;
}

}  // namespace

ClassGroupRecord class_group(long long D) {
    if (D >= 0) throw ValidationError("class_group supports D < 0 only");
    if (-D > kClassGroupCap) throw CapError("|D| exceeds class-group cap");
    if (!is_fundamental_discriminant(D)) throw ValidationError(std::to_string(D) + " is not a fundamental discriminant");
    ClassGroupRecord r;
    r.D = D;
    r.forms = reduced_forms(D);
    r.h = static_cast<long long>(r.forms.size());
    const std::size_t h = r.forms.size();
    auto idx = [&](const QForm& q) {
        auto it = std::lower_bound(r.forms.begin(), r.forms.end(), q);
        if (it == r.forms.end() || *it != q) throw std::logic_error("composition left the reduced-form list");
        return static_cast<std::size_t>(it - r.forms.begin());
    };
    const QForm id = identity_form(D);
    const std::size_t id_i = idx(id);
    r.orders.assign(h, 0);
    r.table_built = r.h <= kTableLimit;
    for (std::size_t i = 0; i < h; ++i) {
        QForm x = r.forms[i];
        long long o = 1;
        while (idx(x) != id_i) {
            x = compose(x, r.forms[i]);
            ++o;
            if (o > r.h) throw std::logic_error("element order exceeds h");
        }
        r.orders[i] = o;
    }
    r.divisors = invariant_factors(r.orders, r.h);
    // Greedy generating set: highest-order element outside the current span.
    std::vector<bool> span(h, false);
    span[id_i] = true;
    std::size_t covered = 1;
    while (covered < h) {
        std::size_t best = h;
        for (std::size_t i = 0; i < h; ++i)
            if (!span[i] && (best == h || r.orders[i] > r.orders[best])) best = i;
        r.generators.push_back(r.forms[best]);
        std::vector<std::size_t> cur;
        for (std::size_t i = 0; i < h; ++i)
            if (span[i]) cur.push_back(i);
        QForm x = r.forms[best];
        std::vector<std::size_t> powers;
        while (true) {
            std::size_t xi = idx(x);
            if (xi == id_i) break;
            powers.push_back(xi);
            x = compose(x, r.forms[best]);
        }
        for (std::size_t s : cur)
            for (std::size_t pw : powers) {
                std::size_t t = idx(compose(r.forms[s], r.forms[pw]));
                if (!span[t]) {
                    span[t] = true;
                    ++covered;
                }
            }
    }
    return r;
}

bool verify_group_axioms(const ClassGroupRecord& r) {
    const std::size_t h = r.forms.size();
    if (h == 0) return false;
    std::vector<std::size_t> table(h * h);
    auto idx = [&](const QForm& q) -> std::optional<std::size_t> {
        auto it = std::lower_bound(r.forms.begin(), r.forms.end(), q);
        if (it == r.forms.end() || *it != q) return std::nullopt;
        return static_cast<std::size_t>(it - r.forms.begin());
    };
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            QForm c = compose(r.forms[i], r.forms[j]);
            if (form_disc(c) != r.D || !is_reduced(c)) return false;
            auto k = idx(c);
            if (!k) return false;
            table[i * h + j] = *k;
        }
    auto e = idx(identity_form(r.D));
    if (!e) return false;
    for (std::size_t i = 0; i < h; ++i) {
        if (table[i * h + *e] != i || table[*e * h + i] != i) return false;
        bool has_inv = false;
        for (std::size_t j = 0; j < h; ++j)
            if (table[i * h + j] == *e) has_inv = true;
        if (!has_inv) return false;
        if (r.h % r.orders[i] != 0) return false;
    }
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            const std::size_t ij = table[i * h + j];
            for (std::size_t k = 0; k < h; ++k)
                if (table[ij * h + k] != table[i * h + table[j * h + k]]) return false;
        }
    return true;
}

long long ell_torsion(const ClassGroupRecord& r, long long ell) {
    if (ell < 1) throw ValidationError("ell must be >= 1");
    long long n = 0;
    for (long long o : r.orders)
        if (ell % o == 0) ++n;
    return n;
}

long long ell_torsion(long long D, long long ell) { return ell_torsion(class_group(D), ell); }

long long genus_two_torsion(long long D) {
    int nu = omega_u64(static_cast<u64>(D < 0 ? -D : D));
    return 1LL << (nu - 1);
}

std::vector<long long> fundamental_discriminants(long long X) {
    std::vector<long long> out;
    for (long long D = -X; D < 0; ++D)
        if (is_fundamental_discriminant(D)) out.push_back(D);
    return out;
}

TorsionStats torsion_stats(long long X, long long ell, int k, int threads) {
    if (ell < 1 || k < 1) throw ValidationError("ell and k must be >= 1");
    TorsionStats st;
    if (X < 3) return st;
    if (X > kClassGroupCap) throw CapError("X exceeds class-group cap");
    auto Ds = fundamental_discriminants(X);
    std::vector<long long> tors(Ds.size());
    const std::size_t T = static_cast<std::size_t>(std::max(1, threads));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < Ds.size(); i += T) tors[i] = ell_torsion(Ds[i], ell);
        });
    for (auto& th : pool) th.join();
    const long double expo = 0.5L - 1.0L / (2.0L * static_cast<long double>(ell));
    for (std::size_t i = 0; i < Ds.size(); ++i) {
        st.moment += boost::multiprecision::pow(BigInt(tors[i]), static_cast<unsigned>(k));
        ++st.count;
        if (static_cast<long double>(tors[i]) > std::pow(static_cast<long double>(-Ds[i]), expo)) ++st.exceptional;
    }
    return st;
}

bool Correspondence::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const CorrespondenceRow& r) { return r.cubic_fields == r.predicted; });
}

Correspondence cubic_correspondence(long long X, int threads) {
    Correspondence out;
    if (X < 3) return out;
    auto search = cubic_fields_by_disc(-X, -1, threads);
    std::map<long long, long long> cnt;
    for (const auto& f : search.fields) ++cnt[f.disc.convert_to<long long>()];
    for (long long D : fundamental_discriminants(X)) {
        auto cg = class_group(D);
        CorrespondenceRow row;
        row.D = D;
        row.h = cg.h;
        row.cubic_fields = cnt.count(D) ? cnt[D] : 0;
        row.predicted = (ell_torsion(cg, 3) - 1) / 2;
        out.rows.push_back(row);
    }
    out.heights = search.heights;
    out.counts = search.counts;
    out.complete = search.complete;
    out.stable = search.stable;
    return out;
}

}  // namespace cheb
