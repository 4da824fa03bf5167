#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

#include "suslov/errors.hpp"

namespace suslov::exact {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Gaussian rational a + b i.
struct GaussRat {
    Rational re{0}, im{0};

    GaussRat() = default;
    GaussRat(long r) : re(r) {}
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw InvalidInput("GaussRat: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline GaussRat gauss_i() { return {Rational(0), Rational(1)}; }

// ---------------------------------------------------------------------------
// dense polynomials, ascending coefficients
// ---------------------------------------------------------------------------

template <typename T>
using Poly = std::vector<T>;

template <typename T>
void poly_trim(Poly<T>& p) {
    while (p.size() > 1 && p.back() == T(0)) p.pop_back();
}

template <typename T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> out(std::max(a.size(), b.size()), T(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    poly_trim(out);
    return out;
}

template <typename T>
Poly<T> poly_sub(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> out(std::max(a.size(), b.size()), T(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    poly_trim(out);
    return out;
}

template <typename T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> out(a.size() + b.size() - 1, T(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    poly_trim(out);
    return out;
}

template <typename T>
Poly<T> poly_scale(const Poly<T>& a, const T& s) {
    Poly<T> out = a;
    for (T& c : out) c = c * s;
    return out;
}

template <typename T>
Poly<T> poly_derivative(const Poly<T>& a) {
    if (a.size() <= 1) return {T(0)};
    Poly<T> out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * T(static_cast<long>(i));
    return out;
}

template <typename T>
T poly_eval(const Poly<T>& a, const T& x) {
    T s(0);
    for (size_t i = a.size(); i-- > 0;) s = s * x + a[i];
    return s;
}

template <typename T>
bool poly_is_zero(const Poly<T>& a) {
    for (const T& c : a)
        if (!(c == T(0))) return false;
    return true;
}

/// Coefficients of a(x + s) (Taylor shift).
template <typename T>
Poly<T> poly_shift(const Poly<T>& a, const T& s) {
    Poly<T> out{T(0)};
    Poly<T> pw{T(1)}; // (x+s)^i
    const Poly<T> lin{s, T(1)};
    for (size_t i = 0; i < a.size(); ++i) {
        out = poly_add(out, poly_scale(pw, a[i]));
        if (i + 1 < a.size()) pw = poly_mul(pw, lin);
    }
    return out;
}

/// Exact division: a / b with zero remainder required.
template <typename T>
Poly<T> poly_divide_exact(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r = a, q(std::max<size_t>(1, a.size() >= b.size() ? a.size() - b.size() + 1 : 1),
                    T(0));
    poly_trim(r);
    Poly<T> bb = b;
    poly_trim(bb);
    while (r.size() >= bb.size() && !poly_is_zero(r)) {
        const size_t k = r.size() - bb.size();
        const T c = r.back() / bb.back();
        q[k] = c;
        for (size_t i = 0; i < bb.size(); ++i) r[k + i] = r[k + i] - c * bb[i];
        poly_trim(r);
        if (r.size() == 1 && r[0] == T(0)) break;
    }
    if (!poly_is_zero(r)) throw DivisionObstruction("poly_divide_exact: nonzero remainder");
    poly_trim(q);
    return q;
}

/// First n coefficients of 1/b, b[0] != 0.
template <typename T>
Poly<T> poly_series_inverse(const Poly<T>& b, size_t n) {
    if (b.empty() || b[0] == T(0))
        throw InvalidInput("poly_series_inverse: constant term is zero");
    Poly<T> c(n, T(0));
    c[0] = T(1) / b[0];
    for (size_t k = 1; k < n; ++k) {
        T s(0);
        for (size_t j = 1; j <= k && j < b.size(); ++j) s = s + b[j] * c[k - j];
        c[k] = -s / b[0];
    }
    return c;
}

/// Reversal x^deg * a(1/x) at fixed length (pads with zeros up to len).
template <typename T>
Poly<T> poly_reverse(const Poly<T>& a, size_t len) {
    Poly<T> out(len, T(0));
    for (size_t i = 0; i < a.size() && i < len; ++i) out[len - 1 - i] = a[i];
    poly_trim(out);
    return out;
}

// ---------------------------------------------------------------------------
// rational functions over Q, used as the coefficient field Q(D)
// ---------------------------------------------------------------------------

Poly<Rational> poly_gcd(Poly<Rational> a, Poly<Rational> b);

/// Fraction num/den of polynomials over Q in one variable, gcd-normalized,
/// monic denominator.
struct RatFunc {
    Poly<Rational> num{Rational(0)};
    Poly<Rational> den{Rational(1)};

    RatFunc() = default;
    RatFunc(long v) : num{Rational(v)} {}
    RatFunc(Rational v) : num{std::move(v)} {}
    RatFunc(Poly<Rational> n, Poly<Rational> d);

    static RatFunc variable() { return RatFunc(Poly<Rational>{Rational(0), Rational(1)}, {Rational(1)}); }

    bool is_zero() const { return poly_is_zero(num); }
    double eval_double(double x) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);
};

std::string to_string(const Rational& r);

} // namespace suslov::exact
