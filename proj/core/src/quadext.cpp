#include "leibcheck/quadext.hpp"

#include "leibcheck/error.hpp"
#include "leibcheck/scalar.hpp"

namespace leibcheck {

QuadExt::QuadExt(Gaussian a, Gaussian b, Gaussian d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    normalize();
}

QuadExt QuadExt::sqrt_of(const Gaussian& d) {
    if (gaussian_sqrt(d)) throw Error(Errc::FieldMismatch, "sqrt(" + d.to_string() + ") already lies in Q(i)");
    return QuadExt(Gaussian(0), Gaussian(1), d);
}

void QuadExt::normalize() {
    if (b_.is_zero()) d_.reset();
}

std::optional<Gaussian> QuadExt::join(const QuadExt& x, const QuadExt& y) {
    if (!x.d_) return y.d_;
    if (!y.d_) return x.d_;
    if (!(*x.d_ == *y.d_))
        throw Error(Errc::FieldMismatch, "sqrt(" + x.d_->to_string() + ") vs sqrt(" + y.d_->to_string() + ")");
    return x.d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    auto d = join(*this, o);
    Gaussian na = a_ * o.a_;
    if (d) na += b_ * o.b_ * *d;
    Gaussian nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    normalize();
    return *this;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadExt QuadExt::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0 in quadratic extension");
    if (!d_) return QuadExt(a_.inv());
    Gaussian n = a_ * a_ - b_ * b_ * *d_;  // nonzero because d is not a square
    QuadExt r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    r.normalize();
    return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    QuadExt::join(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

bool quad_less(const QuadExt& x, const QuadExt& y) {
    if (!(x.a_ == y.a_)) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string QuadExt::to_string() const {
    if (!d_) return a_.to_string();
    std::string gen = "sqrt(" + d_->to_string() + ")";
    std::string bpart = b_ == Gaussian(1) ? gen : "(" + b_.to_string() + ")*" + gen;
    if (a_.is_zero()) return bpart;
    return a_.to_string() + "+" + bpart;
}

}  // namespace leibcheck
