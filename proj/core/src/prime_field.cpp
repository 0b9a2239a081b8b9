#include "leibcheck/prime_field.hpp"

#include "leibcheck/error.hpp"

namespace leibcheck {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t sqrt_minus_one(std::uint64_t p) {
    if (!is_prime(p) || p % 4 != 1)
        throw Error(Errc::BadPrime, std::to_string(p) + " is not a prime congruent to 1 mod 4");
    for (std::uint64_t r = 2; r < p; ++r)
        if ((r * r) % p == p - 1) return r;
    throw Error(Errc::BadPrime, "no square root of -1");
}

PrimeFieldElem::PrimeFieldElem(std::int64_t v, std::uint64_t p) : p_(p) {
    if (p < 2) throw Error(Errc::BadPrime, "modulus < 2");
    auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    v_ = static_cast<std::uint64_t>(r);
}

void PrimeFieldElem::check_same(const PrimeFieldElem& o) const {
    if (p_ != o.p_)
        throw Error(Errc::FieldMismatch, "GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
}

PrimeFieldElem PrimeFieldElem::inv() const {
    if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
    // Fermat: v^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
        if (e & 1) result = (result * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return raw(result, p_);
}

std::int64_t PrimeFieldElem::symmetric() const {
    auto v = static_cast<std::int64_t>(v_);
    return v > static_cast<std::int64_t>(p_ / 2) ? v - static_cast<std::int64_t>(p_) : v;
}

PrimeFieldElem& PrimeFieldElem::operator+=(const PrimeFieldElem& o) {
    check_same(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
}

PrimeFieldElem& PrimeFieldElem::operator-=(const PrimeFieldElem& o) {
    check_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

PrimeFieldElem& PrimeFieldElem::operator*=(const PrimeFieldElem& o) {
    check_same(o);
    v_ = (v_ * o.v_) % p_;
    return *this;
}

bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    a.check_same(b);
    return a.v_ == b.v_;
}

}  // namespace leibcheck
