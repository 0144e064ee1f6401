#include "cheb/polyparse.hpp"

#include <cctype>

namespace cheb {

namespace {

constexpr int kMaxDegree = 64;

BigPoly padd(const BigPoly& a, const BigPoly& b, int sign) {
    BigPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
    trim(r);
    return r;
}

BigPoly pmul(const BigPoly& a, const BigPoly& b) {
    if (a.empty() || b.empty()) return {};
    BigPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BigPoly parse() {
        BigPoly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError("polynomial parse error at position " + std::to_string(i_) + ": " + msg);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool starts_primary() {
        skip();
        return i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == 'x' || s_[i_] == '(');
    }

    BigPoly expr() {
        BigPoly p = term();
        while (true) {
            if (eat('+'))
                p = padd(p, term(), 1);
            else if (eat('-'))
                p = padd(p, term(), -1);
            else
                return p;
        }
    }

    BigPoly term() {
        BigPoly p = factor();
        while (true) {
            if (eat('*'))
                p = pmul(p, factor());
            else if (starts_primary())
                p = pmul(p, factor());  // implicit product, e.g. 3x
            else
                return p;
        }
    }

    BigPoly factor() {
        if (eat('-')) return padd({}, factor(), -1);
        if (eat('+')) return factor();
        BigPoly base = primary();
        if (eat('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("exponent must be a non-negative integer");
            if (i_ - st > 3) fail("exponent too large");
            int e = std::stoi(s_.substr(st, i_ - st));
            BigPoly r{1};
            for (int k = 0; k < e; ++k) {
                r = pmul(r, base);
                if (static_cast<int>(r.size()) - 1 > kMaxDegree) fail("degree exceeds " + std::to_string(kMaxDegree));
            }
            return r;
        }
        return base;
    }

    BigPoly primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == 'x') {
            ++i_;
            return {0, 1};
        }
        if (c == '(') {
            ++i_;
            BigPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            BigPoly p{BigInt(s_.substr(st, i_ - st))};
            trim(p);
            return p;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

BigPoly parse_poly_big(const std::string& s) {
    BigPoly p = Parser(s).parse();
    trim(p);
    return p;
}

ZPoly parse_poly(const std::string& s) {
    BigPoly p = parse_poly_big(s);
    if (p.empty()) throw ValidationError("zero polynomial");
    std::vector<long long> c;
    for (const auto& v : p) {
        auto x = to_ll(v);
        if (!x) throw CapError("coefficient exceeds 64-bit range");
        c.push_back(*x);
    }
    return ZPoly(c);
}

}  // namespace cheb
