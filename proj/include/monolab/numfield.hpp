#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "monolab/errors.hpp"
#include "monolab/intmatrix.hpp"
#include "monolab/intpoly.hpp"

namespace monolab {

// K = Q[x]/(f) with f monic irreducible of degree d >= 2.
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(IntPoly min_poly) {
        if (min_poly.degree() < 2) raise(errc::degree_too_low, "number field needs degree >= 2");
        if (!min_poly.is_monic()) raise(errc::bad_input, "minimal polynomial must be monic");
        if (!is_irreducible_q(min_poly)) raise(errc::reducible, "minimal polynomial is reducible over Q");
        return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly)));
    }

    const IntPoly& min_poly() const { return f_; }
    int degree() const { return f_.degree(); }

private:
    explicit NumberField(IntPoly f) : f_(std::move(f)) {}
    IntPoly f_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of K as a coordinate vector on the power basis 1, x, ..., x^(d-1).
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<mpq_class> coords)
        : field_(std::move(field)), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != field_->degree())
            raise(errc::bad_input, "coordinate vector length != field degree");
    }

    static FieldElement zero(const FieldPtr& k) {
        return FieldElement(k, std::vector<mpq_class>(k->degree(), mpq_class(0)));
    }
    static FieldElement one(const FieldPtr& k) { return from_rational(k, mpq_class(1)); }
    static FieldElement gen(const FieldPtr& k) {
        std::vector<mpq_class> c(k->degree(), mpq_class(0));
        c[1] = 1;
        return FieldElement(k, std::move(c));
    }
    static FieldElement from_rational(const FieldPtr& k, const mpq_class& v) {
        std::vector<mpq_class> c(k->degree(), mpq_class(0));
        c[0] = v;
        return FieldElement(k, std::move(c));
    }
    static FieldElement from_int_coords(const FieldPtr& k, const std::vector<long>& v) {
        std::vector<mpq_class> c;
        c.reserve(v.size());
        for (long x : v) c.emplace_back(x);
        return FieldElement(k, std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coords() const { return c_; }
    int degree_of_field() const { return field_->degree(); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->min_poly() == b.field_->min_poly() && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // total order for canonical sorting / map keys (same field assumed)
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        for (size_t i = 0; i < a.c_.size(); ++i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

private:
    FieldPtr field_;
    std::vector<mpq_class> c_;
};

inline void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field()->min_poly() != b.field()->min_poly())
        raise(errc::field_mismatch, "elements live in different fields");
}

namespace detail {

// reduce a coefficient vector of length <= 2d-1 modulo the monic min poly
inline std::vector<mpq_class> reduce_mod(std::vector<mpq_class> c, const IntPoly& f) {
    int d = f.degree();
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
        if (c[i] == 0) continue;
        mpq_class t = c[i];
        c[i] = 0;
        for (int j = 0; j < d; ++j)
            if (f.coeff(j) != 0) c[i - d + j] -= t * mpq_class(f.coeff(j));
    }
    c.resize(d);
    return c;
}

} // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::vector<mpq_class> c(a.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return FieldElement(a.field(), std::move(c));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    std::vector<mpq_class> c(a.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
    return FieldElement(a.field(), std::move(c));
}

inline FieldElement operator-(const FieldElement& a) {
    std::vector<mpq_class> c(a.coords());
    for (auto& v : c) v = -v;
    return FieldElement(a.field(), std::move(c));
}

inline FieldElement operator*(const mpq_class& s, const FieldElement& a) {
    std::vector<mpq_class> c(a.coords());
    for (auto& v : c) v *= s;
    return FieldElement(a.field(), std::move(c));
}

// product reduced modulo the minimal polynomial
inline FieldElement elt_mul(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    int d = a.degree_of_field();
    std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
    for (int i = 0; i < d; ++i) {
        if (a.coords()[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coords()[j] == 0) continue;
            prod[i + j] += a.coords()[i] * b.coords()[j];
        }
    }
    return FieldElement(a.field(), detail::reduce_mod(std::move(prod), a.field()->min_poly()));
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return elt_mul(a, b); }

// multiplicative inverse by the extended Euclidean algorithm against min_poly
inline FieldElement elt_inv(const FieldElement& x) {
    if (x.is_zero()) raise(errc::zero_division, "inverse of zero");
    const IntPoly& f = x.field()->min_poly();
    RatPoly a(f);
    RatPoly b{std::vector<mpq_class>(x.coords())};
    // extended Euclid: find u with u*b == gcd (mod a); gcd is a nonzero constant
    RatPoly r0 = a, r1 = b;
    RatPoly t0 = RatPoly::zero(), t1 = RatPoly::constant(mpq_class(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    require_internal(r0.degree() == 0, "gcd with irreducible min poly must be constant");
    RatPoly inv = mpq_class(1) / r0.lc() * t0;
    std::vector<mpq_class> c(x.degree_of_field(), mpq_class(0));
    for (int i = 0; i <= inv.degree(); ++i) c[i] = inv.coeff(i);
    return FieldElement(x.field(), detail::reduce_mod(std::move(c), f));
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return elt_mul(a, elt_inv(b));
}

inline FieldElement elt_pow(FieldElement base, long e) {
    const FieldPtr& k = base.field();
    if (e < 0) {
        base = elt_inv(base);
        e = -e;
    }
    FieldElement r = FieldElement::one(k);
    while (e) {
        if (e & 1) r = elt_mul(r, base);
        base = elt_mul(base, base);
        e >>= 1;
    }
    return r;
}

// evaluate a rational polynomial at a field element
inline FieldElement eval_poly_at(const RatPoly& p, const FieldElement& x) {
    FieldElement r = FieldElement::zero(x.field());
    for (int i = p.degree(); i >= 0; --i) {
        r = elt_mul(r, x);
        r = r + FieldElement::from_rational(x.field(), p.coeff(i));
    }
    return r;
}
inline FieldElement eval_poly_at(const IntPoly& p, const FieldElement& x) {
    return eval_poly_at(RatPoly(p), x);
}

// Characteristic polynomial of multiplication-by-x on K as a Q-vector
// space, monic of degree d, via the Faddeev-LeVerrier recurrence.
inline RatPoly char_poly_of(const FieldElement& x) {
    int d = x.degree_of_field();
    // multiplication matrix: column j = coords of x * basis_j
    std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d));
    FieldElement pw = FieldElement::one(x.field());
    for (int j = 0; j < d; ++j) {
        FieldElement col = elt_mul(x, pw);
        for (int i = 0; i < d; ++i) M[i][j] = col.coords()[i];
        if (j + 1 < d) pw = elt_mul(pw, FieldElement::gen(x.field()));
    }
    auto mat_mul = [&](const std::vector<std::vector<mpq_class>>& A,
                       const std::vector<std::vector<mpq_class>>& B) {
        std::vector<std::vector<mpq_class>> C(d, std::vector<mpq_class>(d, mpq_class(0)));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (A[i][k] == 0) continue;
                for (int j = 0; j < d; ++j) C[i][j] += A[i][k] * B[k][j];
            }
        return C;
    };
    std::vector<mpq_class> coeffs(d + 1, mpq_class(0));
    coeffs[d] = 1;
    std::vector<std::vector<mpq_class>> N = M;
    for (int k = 1; k <= d; ++k) {
        mpq_class tr(0);
        for (int i = 0; i < d; ++i) tr += N[i][i];
        mpq_class ck = -tr / k;
        coeffs[d - k] = ck;
        if (k == d) break;
        for (int i = 0; i < d; ++i) N[i][i] += ck;
        N = mat_mul(M, N);
    }
    return RatPoly(std::move(coeffs));
}

// true iff the element is integral over Z (char poly has integer coefficients)
inline bool is_integral(const FieldElement& x) { return char_poly_of(x).is_integral(); }

// true iff x generates the field, i.e. its char poly is squarefree of full degree
inline bool is_generator(const FieldElement& x) {
    RatPoly chi = char_poly_of(x);
    return is_squarefree_q(chi);
}

inline mpq_class norm_of(const FieldElement& x) {
    RatPoly chi = char_poly_of(x);
    int d = x.degree_of_field();
    mpq_class n = chi.coeff(0);
    if (d % 2 == 1) n = -n;
    return n;
}

// The unique F of degree < d with F(alpha) = beta, if alpha generates K.
inline RatPoly express_in_powers(const FieldElement& beta, const FieldElement& alpha) {
    check_same_field(beta, alpha);
    if (!is_generator(alpha)) raise(errc::not_a_generator, "alpha generates a proper subfield");
    int d = alpha.degree_of_field();
    RatMatrix P(d, d);
    FieldElement pw = FieldElement::one(alpha.field());
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) P.at(i, j) = pw.coords()[i];
        if (j + 1 < d) pw = elt_mul(pw, alpha);
    }
    auto sol = solve_linear(P, beta.coords());
    require_internal(sol.has_value(), "power basis of a generator must span");
    RatPoly r(std::move(*sol));
    return r;
}

} // namespace monolab
