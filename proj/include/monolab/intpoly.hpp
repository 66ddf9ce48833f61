#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monolab/errors.hpp"

namespace monolab {

inline mpz_class mpz_pow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Dense univariate polynomial over Z, coefficient of x^i at index i,
// trailing zeros trimmed so degree() == coeffs.size()-1 (or -1 for zero).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(mpz_class v) { return IntPoly(std::vector<mpz_class>{std::move(v)}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly monomial(int deg, mpz_class coeff) {
        std::vector<mpz_class> c(deg + 1, mpz_class(0));
        c[deg] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return mpz_class(0);
        return c_[i];
    }
    const mpz_class& lc() const {
        static const mpz_class z0(0);
        return c_.empty() ? z0 : c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const {
        std::vector<mpz_class> c(c_);
        for (auto& v : c) v = -v;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const mpz_class& s, const IntPoly& a) {
        if (s == 0) return IntPoly();
        std::vector<mpz_class> c(a.c_);
        for (auto& v : c) v *= s;
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<mpz_class> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = mpz_class(i) * c_[i];
        return IntPoly(std::move(c));
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // x^deg * p(1/x); only safe for constant term handling by caller.
    IntPoly reversed() const {
        std::vector<mpz_class> c(c_.rbegin(), c_.rend());
        return IntPoly(std::move(c));
    }

    mpz_class content() const {
        mpz_class g(0);
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        mpz_class g = content();
        if (lc() < 0) g = -g;
        std::vector<mpz_class> c(c_);
        for (auto& v : c) v /= g;
        return IntPoly(std::move(c));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& a = c_[i];
            if (a == 0) continue;
            mpz_class mag = abs(a);
            if (s.empty())
                s += (a < 0 ? "-" : "");
            else
                s += (a < 0 ? " - " : " + ");
            bool unit = (mag == 1) && i > 0;
            if (!unit) s += mag.get_str();
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// Dense univariate polynomial over Q; every coefficient canonical.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& p) {
        for (const auto& v : p.coeffs()) c_.emplace_back(v);
        trim();
    }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(mpq_class v) { return RatPoly(std::vector<mpq_class>{std::move(v)}); }
    static RatPoly x() { return RatPoly(std::vector<mpq_class>{mpq_class(0), mpq_class(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return mpq_class(0);
        return c_[i];
    }
    const mpq_class& lc() const {
        static const mpq_class z0(0);
        return c_.empty() ? z0 : c_.back();
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RatPoly(std::move(c));
    }
    RatPoly operator-() const {
        std::vector<mpq_class> c(c_);
        for (auto& v : c) v = -v;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const mpq_class& s, const RatPoly& a) {
        if (s == 0) return RatPoly();
        std::vector<mpq_class> c(a.c_);
        for (auto& v : c) v *= s;
        return RatPoly(std::move(c));
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<mpq_class> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = mpq_class(static_cast<long>(i)) * c_[i];
        return RatPoly(std::move(c));
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    RatPoly monic() const {
        if (is_zero()) return RatPoly();
        return mpq_class(1) / lc() * *this;
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const {
        if (d.is_zero()) raise(errc::zero_division, "polynomial division by zero");
        std::vector<mpq_class> r(c_);
        int dd = d.degree();
        if (degree() < dd) return {RatPoly(), *this};
        std::vector<mpq_class> q(degree() - dd + 1, mpq_class(0));
        for (int i = degree(); i >= dd; --i) {
            mpq_class t = r[i] / d.lc();
            if (t == 0) continue;
            q[i - dd] = t;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] -= t * d.c_[j];
        }
        return {RatPoly(std::move(q)), RatPoly(std::move(r))};
    }

    bool divides_exactly(const RatPoly& dividend) const {
        return dividend.divmod(*this).second.is_zero();
    }

    // True when all coefficients are integers.
    bool is_integral() const {
        for (const auto& v : c_)
            if (v.get_den() != 1) return false;
        return true;
    }
    IntPoly to_int_poly() const {
        std::vector<mpz_class> c;
        c.reserve(c_.size());
        for (const auto& v : c_) {
            if (v.get_den() != 1) raise(errc::bad_input, "polynomial has non-integer coefficient");
            c.push_back(v.get_num());
        }
        return IntPoly(std::move(c));
    }

    // Clear denominators: returns primitive integer polynomial with the same roots.
    IntPoly primitive_scaled() const {
        mpz_class l(1);
        for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<mpz_class> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(v.get_num() * (l / v.get_den()));
        return IntPoly(std::move(c)).primitive_part();
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const mpq_class& a = c_[i];
            if (a == 0) continue;
            mpq_class mag = abs(a);
            if (s.empty())
                s += (a < 0 ? "-" : "");
            else
                s += (a < 0 ? " - " : " + ");
            bool unit = (mag == 1) && i > 0;
            if (!unit) s += mag.get_str();
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

inline RatPoly gcd_monic(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

inline bool is_squarefree_q(const RatPoly& f) {
    if (f.degree() <= 1) return true;
    return gcd_monic(f, f.derivative()).degree() == 0;
}

// --- resultant via the sub-resultant pseudo-remainder sequence ------------

namespace detail {

// lc(B)^(delta+1) * A = Q*B + R with everything in Z[x]; returns R.
inline IntPoly prem(const IntPoly& A, const IntPoly& B) {
    IntPoly R = A;
    int delta = A.degree() - B.degree();
    int e = delta + 1;
    const mpz_class& lb = B.lc();
    while (!R.is_zero() && R.degree() >= B.degree()) {
        IntPoly S = IntPoly::monomial(R.degree() - B.degree(), R.lc()) * B;
        R = lb * R - S;
        --e;
    }
    if (e > 0) R = mpz_pow(lb, e) * R;
    return R;
}

} // namespace detail

// Res(p, q), exact, by the sub-resultant PRS.
inline mpz_class resultant(IntPoly A, IntPoly B) {
    if (A.is_zero() && B.is_zero()) raise(errc::both_zero, "resultant of two zero polynomials");
    if (A.is_zero() || B.is_zero()) return mpz_class(0);
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() % 2) == 1 && (B.degree() % 2) == 1) s = -1;
    }
    if (B.degree() == 0) {
        if (A.degree() == 0) return mpz_class(1);
        return mpz_class(s) * mpz_pow(B.lc(), A.degree());
    }
    mpz_class a = A.content();
    mpz_class b = B.content();
    {
        std::vector<mpz_class> ca(A.coeffs()), cb(B.coeffs());
        for (auto& v : ca) v /= a;
        for (auto& v : cb) v /= b;
        A = IntPoly(std::move(ca));
        B = IntPoly(std::move(cb));
    }
    mpz_class t = mpz_pow(a, B.degree()) * mpz_pow(b, A.degree()) * s;
    mpz_class g(1), h(1);
    while (true) {
        int dA = A.degree(), dB = B.degree();
        int delta = dA - dB;
        if ((dA % 2) == 1 && (dB % 2) == 1) t = -t;
        IntPoly R = detail::prem(A, B);
        A = B;
        {
            mpz_class div = g * mpz_pow(h, delta);
            std::vector<mpz_class> c(R.coeffs());
            for (auto& v : c) {
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
                require_internal(r == 0, "sub-resultant division not exact");
                v = q;
            }
            B = IntPoly(std::move(c));
        }
        g = A.lc();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1), exact by sub-resultant theory
            mpz_class num = mpz_pow(g, delta);
            mpz_class den = mpz_pow(h, delta - 1);
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            require_internal(r == 0, "sub-resultant h update not exact");
            h = q;
        }
        if (B.is_zero()) return mpz_class(0);
        if (B.degree() == 0) {
            int dAf = A.degree();
            mpz_class num = mpz_pow(B.lc(), dAf);
            mpz_class den = mpz_pow(h, dAf - 1);
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            require_internal(r == 0, "sub-resultant final division not exact");
            return t * q;
        }
    }
}

// (-1)^(d(d-1)/2) * Res(f, f') / lc(f), d = deg f >= 2.
inline mpz_class discriminant_poly(const IntPoly& f) {
    int d = f.degree();
    if (d < 2) raise(errc::degree_too_low, "discriminant needs degree >= 2");
    mpz_class res = resultant(f, f.derivative());
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    require_internal(r == 0, "Res(f, f') not divisible by lc(f)");
    if (((d * (d - 1)) / 2) % 2 == 1) q = -q;
    return q;
}

// --- irreducibility over Q (desk scale, degree <= cap) --------------------

namespace detail {

// Arithmetic in F_p[x] with small p, coefficients reduced to [0, p).
using FpPoly = std::vector<uint64_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_from(const IntPoly& f, uint64_t p) {
    FpPoly a(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class r = f.coeff(i) % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        a[i] = r.get_ui();
    }
    fp_trim(a);
    return a;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    fp_trim(c);
    return c;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, uint64_t p) {
    // m monic
    while (a.size() >= m.size() && !a.empty()) {
        uint64_t t = a.back();
        size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = (t * m[i]) % p;
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        fp_trim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    auto make_monic = [&](FpPoly& v) {
        if (v.empty()) return;
        uint64_t inv = 1, base = v.back(), e = p - 2;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (auto& c : v) c = (c * inv) % p;
    };
    make_monic(a);
    while (!b.empty()) {
        make_monic(b);
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

inline FpPoly fp_powmod_x(uint64_t p, const FpPoly& base, const FpPoly& m) {
    // base^p mod m by square-and-multiply
    FpPoly r{1};
    FpPoly b = base;
    uint64_t e = p;
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, b, p), m, p);
        b = fp_mod(fp_mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

inline FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (a[i] * (i % p)) % p;
    fp_trim(d);
    return d;
}

inline std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& m, uint64_t p) {
    // m monic
    if (a.size() < m.size()) return {{}, a};
    FpPoly q(a.size() - m.size() + 1, 0);
    while (a.size() >= m.size() && !a.empty()) {
        uint64_t t = a.back();
        size_t off = a.size() - m.size();
        q[off] = t;
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = (t * m[i]) % p;
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        fp_trim(a);
        if (a.size() < m.size()) break;
    }
    fp_trim(q);
    return {q, a};
}

// Degrees (with multiplicity) of the irreducible factors of f mod p.
// Requires f mod p squarefree with nonvanishing leading coefficient;
// returns empty optional when the prime is unusable.
inline std::optional<std::vector<int>> fp_factor_degrees(const IntPoly& f, uint64_t p) {
    if (f.lc() % static_cast<long>(p) == 0) return std::nullopt;
    FpPoly a = fp_from(f, p);
    // make monic
    {
        uint64_t inv = 1, base = a.back(), e = p - 2;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (auto& c : a) c = (c * inv) % p;
    }
    FpPoly g = fp_gcd(a, fp_derivative(a, p), p);
    if (g.size() != 1) return std::nullopt; // not squarefree mod p
    std::vector<int> degs;
    FpPoly fstar = a;
    FpPoly h{0, 1}; // x
    int k = 0;
    while (static_cast<int>(fstar.size()) - 1 >= 1) {
        ++k;
        if (2 * k > static_cast<int>(fstar.size()) - 1) {
            degs.push_back(static_cast<int>(fstar.size()) - 1);
            break;
        }
        h = fp_powmod_x(p, h, fstar);
        FpPoly hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        fp_trim(hx);
        FpPoly g2 = fp_gcd(fstar, hx, p);
        if (g2.size() > 1) {
            int total = static_cast<int>(g2.size()) - 1;
            for (int i = 0; i < total / k; ++i) degs.push_back(k);
            fstar = fp_divmod(fstar, g2, p).first;
            h = fp_mod(h, fstar, p);
        }
    }
    return degs;
}

inline std::set<int> subset_sums(const std::vector<int>& degs) {
    std::set<int> sums{0};
    for (int d : degs) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

// All divisors of |n|, n != 0. Trial division plus Pollard rho.
inline void factor_into(mpz_class n, std::vector<std::pair<mpz_class, int>>& out);

inline mpz_class pollard_rho(const mpz_class& n) {
    // n odd composite, not a prime power of small primes
    for (unsigned long c = 1;; ++c) {
        mpz_class x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), n.get_mpz_t(), diff.get_mpz_t());
        }
        if (d != 0 && d != n && d > 1) return d;
    }
}

inline void factor_into(mpz_class n, std::vector<std::pair<mpz_class, int>>& out) {
    if (n < 0) n = -n;
    for (unsigned long p = 2; p < 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(n % p) == 0) {
            int e = 0;
            while (mpz_class(n % p) == 0) {
                n /= static_cast<long>(p);
                ++e;
            }
            out.emplace_back(mpz_class(static_cast<long>(p)), e);
        }
        if (mpz_class(p) * static_cast<long>(p) > n) break;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out.emplace_back(n, 1);
        return;
    }
    mpz_class d = pollard_rho(n);
    std::vector<std::pair<mpz_class, int>> a, b;
    factor_into(d, a);
    factor_into(n / d, b);
    // merge
    for (auto& pr : a) {
        bool merged = false;
        for (auto& qr : out)
            if (qr.first == pr.first) {
                qr.second += pr.second;
                merged = true;
            }
        if (!merged) out.push_back(pr);
    }
    for (auto& pr : b) {
        bool merged = false;
        for (auto& qr : out)
            if (qr.first == pr.first) {
                qr.second += pr.second;
                merged = true;
            }
        if (!merged) out.push_back(pr);
    }
}

inline std::vector<mpz_class> divisors_of(const mpz_class& n) {
    std::vector<std::pair<mpz_class, int>> fac;
    factor_into(n, fac);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : fac) {
        size_t sz = divs.size();
        mpz_class pe(1);
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Newton-form interpolation through (xs[i], ys[i]).
inline RatPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpq_class>& ys) {
    size_t n = xs.size();
    std::vector<mpq_class> dd(ys);
    // divided differences
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            mpq_class den(xs[i] - xs[i - level]);
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == level) break;
        }
    RatPoly r = RatPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        RatPoly shift(std::vector<mpq_class>{mpq_class(-xs[i]), mpq_class(1)});
        r = shift * r + RatPoly::constant(dd[i]);
    }
    return r;
}

// Finds an integer-coefficient factor of degree exactly k by value
// interpolation (divisors of f at sample points), or nullopt.
inline std::optional<IntPoly> factor_of_degree(const IntPoly& f, int k) {
    std::vector<mpz_class> xs;
    std::vector<std::vector<mpz_class>> divs;
    for (long t = 0; static_cast<int>(xs.size()) < k + 1; ++t) {
        long cand = (t % 2 == 0) ? t / 2 : -(t / 2 + 1); // 0, -1, 1, -2, 2, ...
        mpz_class v = f.eval(mpz_class(cand));
        if (v == 0) continue; // rational root; caller screens those first
        xs.emplace_back(cand);
        divs.push_back(divisors_of(v));
        if (t > 64) raise(errc::assertion_failed, "could not find enough sample points");
    }
    RatPoly fr(f);
    std::vector<mpz_class> pick(k + 1);
    // depth-first over divisor tuples; first coordinate positive (global sign)
    std::vector<size_t> idx(k + 1, 0);
    std::vector<int> sign(k + 1, 1);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == k + 1) {
            std::vector<mpq_class> ys;
            ys.reserve(k + 1);
            for (int i = 0; i <= k; ++i) ys.emplace_back(pick[i]);
            RatPoly g = interpolate(xs, ys);
            if (g.degree() != k) return false;
            if (!g.divides_exactly(fr)) return false;
            return true;
        }
        for (size_t i = 0; i < divs[pos].size(); ++i) {
            for (int s = 0; s < (pos == 0 ? 1 : 2); ++s) {
                pick[pos] = (s == 0) ? divs[pos][i] : mpz_class(-divs[pos][i]);
                if (rec(pos + 1)) return true;
            }
        }
        return false;
    };
    if (rec(0)) {
        std::vector<mpq_class> ys;
        for (int i = 0; i <= k; ++i) ys.emplace_back(pick[i]);
        return interpolate(xs, ys).primitive_scaled();
    }
    return std::nullopt;
}

} // namespace detail

// True iff f (primitive, deg >= 1) is irreducible over Q. Screens with a
// rational-root test and factor-degree patterns modulo several primes, then
// falls back to an exhaustive divisor-interpolation factor search. Capped.
inline bool is_irreducible_q(const IntPoly& f_in, int degree_cap = 8) {
    IntPoly f = f_in.primitive_part();
    int d = f.degree();
    if (d < 1) raise(errc::degree_too_low, "irreducibility needs degree >= 1");
    if (d > degree_cap) raise(errc::degree_too_high, "irreducibility capped at degree " + std::to_string(degree_cap));
    if (d == 1) return true;
    if (f.coeff(0) == 0) return false; // x divides
    // rational root screen: roots p/q, p | f(0), q | lc
    {
        auto ps = detail::divisors_of(f.coeff(0));
        auto qs = detail::divisors_of(f.lc());
        RatPoly fr(f);
        for (const auto& p : ps)
            for (const auto& q : qs) {
                mpq_class r1 = make_q(p, q), r2 = make_q(-p, q);
                if (fr.eval(r1) == 0 || fr.eval(r2) == 0) return false;
            }
        if (d <= 3) return true;
    }
    // factor-degree screen over several primes
    static const uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::set<int> possible;
    for (int i = 0; i <= d; ++i) possible.insert(i);
    int used = 0;
    for (uint64_t p : primes) {
        auto degs = detail::fp_factor_degrees(f, p);
        if (!degs) continue;
        auto sums = detail::subset_sums(*degs);
        std::set<int> inter;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(inter, inter.begin()));
        possible = std::move(inter);
        if (++used >= 6) break;
        bool nontrivial = false;
        for (int k : possible)
            if (k > 0 && k < d) nontrivial = true;
        if (!nontrivial) break;
    }
    std::vector<int> to_try;
    for (int k : possible)
        if (k >= 1 && k <= d / 2) to_try.push_back(k);
    if (to_try.empty()) return true;
    for (int k : to_try)
        if (detail::factor_of_degree(f, k)) return false;
    return true;
}

} // namespace monolab
