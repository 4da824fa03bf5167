#include "suslov/exact.hpp"

#include <sstream>

namespace suslov::exact {

Poly<Rational> poly_gcd(Poly<Rational> a, Poly<Rational> b) {
    poly_trim(a);
    poly_trim(b);
    while (!poly_is_zero(b)) {
        // remainder of a by b
        Poly<Rational> r = a;
        while (r.size() >= b.size() && !poly_is_zero(r)) {
            const size_t k = r.size() - b.size();
            const Rational c = r.back() / b.back();
            for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
            poly_trim(r);
            if (r.size() < b.size()) break;
        }
        a = b;
        b = r;
        poly_trim(b);
        if (b.size() == 1 && b[0] == 0) break;
    }
    // monic normalization
    if (!poly_is_zero(a) && a.back() != 1) {
        const Rational lead = a.back();
        for (Rational& c : a) c /= lead;
    }
    return a;
}

RatFunc::RatFunc(Poly<Rational> n, Poly<Rational> d) : num(std::move(n)), den(std::move(d)) {
    poly_trim(num);
    poly_trim(den);
    if (poly_is_zero(den)) throw InvalidInput("RatFunc: zero denominator");
    if (poly_is_zero(num)) {
        num = {Rational(0)};
        den = {Rational(1)};
        return;
    }
    const Poly<Rational> g = poly_gcd(num, den);
    if (g.size() > 1) {
        num = poly_divide_exact(num, g);
        den = poly_divide_exact(den, g);
    }
    const Rational lead = den.back();
    if (lead != 1) {
        for (Rational& c : num) c /= lead;
        for (Rational& c : den) c /= lead;
    }
}

double RatFunc::eval_double(double x) const {
    double n = 0.0, d = 0.0;
    for (size_t i = num.size(); i-- > 0;) n = n * x + to_double(num[i]);
    for (size_t i = den.size(); i-- > 0;) d = d * x + to_double(den[i]);
    return n / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                   poly_mul(a.den, b.den));
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(poly_sub(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                   poly_mul(a.den, b.den));
}
RatFunc operator-(const RatFunc& a) { return RatFunc(poly_scale(a.num, Rational(-1)), a.den); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw InvalidInput("RatFunc: division by zero");
    return RatFunc(poly_mul(a.num, b.den), poly_mul(a.den, b.num));
}
bool operator==(const RatFunc& a, const RatFunc& b) {
    return poly_is_zero((a - b).num);
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace suslov::exact
