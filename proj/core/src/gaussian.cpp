#include "leibcheck/gaussian.hpp"

#include "leibcheck/error.hpp"

namespace leibcheck {

Gaussian Gaussian::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0 in Q(i)");
    Rational n = norm();
    return Gaussian(re_ / n, -im_ / n);
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

std::string Gaussian::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    Rational mag = im_.sign() < 0 ? -im_ : im_;
    imag = mag == Rational(1) ? "i" : mag.to_string() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

}  // namespace leibcheck
