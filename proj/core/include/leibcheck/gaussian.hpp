#pragma once

#include "leibcheck/rational.hpp"

#include <compare>
#include <string>

namespace leibcheck {

// re + im*i with rational parts.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }
    Gaussian zero_like() const { return {}; }
    Gaussian one_like() const { return Gaussian(1); }
    Gaussian from_int(long v) const { return Gaussian(v); }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Gaussian inv() const;

    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inv(); }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

    // Total order used only for canonical choices: lexicographic on (re, im).
    friend std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b) {
        if (auto c = a.re_ <=> b.re_; c != 0) return c;
        return a.im_ <=> b.im_;
    }

    // Renders in the coefficient grammar: "3", "-1/2", "i", "1/2-3*i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

}  // namespace leibcheck
