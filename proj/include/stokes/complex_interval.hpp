#pragma once

#include "stokes/interval.hpp"

namespace stokes {

// Axis-aligned rectangle {a + bi : a in re, b in im}.
struct ComplexInterval {
    Interval re, im;

    ComplexInterval() = default;
    ComplexInterval(Interval r, Interval i) : re(r), im(i) {}
    ComplexInterval(double r, double i) : re(r), im(i) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    ComplexInterval operator-() const { return {-re, -im}; }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator*(const Interval& a, const ComplexInterval& b) {
        return {a * b.re, a * b.im};
    }
};

// rigorous upper bound for |z| over the rectangle
inline double abs_upper(const ComplexInterval& z) {
    double r = z.re.mag(), i = z.im.mag();
    return rnd::sqrt_up(rnd::add_up(rnd::mul_up(r, r), rnd::mul_up(i, i)));
}

// rigorous lower bound for |z| over the rectangle (0 if the rectangle
// contains the origin)
inline double abs_lower(const ComplexInterval& z) {
    double r = z.re.mig(), i = z.im.mig();
    return rnd::sqrt_down(rnd::add_down(rnd::mul_down(r, r), rnd::mul_down(i, i)));
}

inline ComplexInterval complex_div(const ComplexInterval& a, const ComplexInterval& b) {
    if (abs_lower(b) <= 0.0) throw DomainError("complex division by rectangle containing zero");
    Interval d = sq(b.re) + sq(b.im);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline ComplexInterval complex_exp(const ComplexInterval& z) {
    Interval m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

}  // namespace stokes
