#pragma once

#include "leibcheck/gaussian.hpp"

#include <optional>
#include <string>

namespace leibcheck {

// a + b*sqrt(d) over Q(i). An element without a generator is a plain Q(i)
// value (b = 0) and combines with any extension; two elements carrying
// different generators raise FieldMismatch.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Gaussian a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Gaussian a, Gaussian b, Gaussian d);

    // The generator sqrt(d) itself; d must not be a square in Q(i).
    static QuadExt sqrt_of(const Gaussian& d);

    const Gaussian& a() const { return a_; }
    const Gaussian& b() const { return b_; }
    const std::optional<Gaussian>& d() const { return d_; }
    bool in_base() const { return b_.is_zero(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    QuadExt zero_like() const { return QuadExt(); }
    QuadExt one_like() const { return QuadExt(1); }
    QuadExt from_int(long v) const { return QuadExt(v); }

    QuadExt inv() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    QuadExt operator-() const;

    friend bool operator==(const QuadExt& x, const QuadExt& y);

    // Lexicographic on (a, b); used to pick canonical representatives.
    friend bool quad_less(const QuadExt& x, const QuadExt& y);

    std::string to_string() const;

private:
    void normalize();
    static std::optional<Gaussian> join(const QuadExt& x, const QuadExt& y);

    Gaussian a_;
    Gaussian b_;
    std::optional<Gaussian> d_;
};

}  // namespace leibcheck
