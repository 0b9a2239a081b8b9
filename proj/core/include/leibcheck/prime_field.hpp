#pragma once

#include <cstdint>
#include <string>

namespace leibcheck {

bool is_prime(std::uint64_t p);

// Smaller square root of -1 modulo p; requires p prime, p = 1 mod 4.
std::uint64_t sqrt_minus_one(std::uint64_t p);

class PrimeFieldElem {
public:
    PrimeFieldElem() = default;
    PrimeFieldElem(std::int64_t v, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    PrimeFieldElem zero_like() const { return raw(0, p_); }
    PrimeFieldElem one_like() const { return raw(1, p_); }
    PrimeFieldElem from_int(long v) const { return PrimeFieldElem(v, p_); }

    PrimeFieldElem inv() const;
    // Symmetric residue in (-p/2, p/2].
    std::int64_t symmetric() const;

    PrimeFieldElem& operator+=(const PrimeFieldElem& o);
    PrimeFieldElem& operator-=(const PrimeFieldElem& o);
    PrimeFieldElem& operator*=(const PrimeFieldElem& o);
    PrimeFieldElem& operator/=(const PrimeFieldElem& o) { return *this *= o.inv(); }

    friend PrimeFieldElem operator+(PrimeFieldElem a, const PrimeFieldElem& b) { return a += b; }
    friend PrimeFieldElem operator-(PrimeFieldElem a, const PrimeFieldElem& b) { return a -= b; }
    friend PrimeFieldElem operator*(PrimeFieldElem a, const PrimeFieldElem& b) { return a *= b; }
    friend PrimeFieldElem operator/(PrimeFieldElem a, const PrimeFieldElem& b) { return a /= b; }
    PrimeFieldElem operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b);

    std::string to_string() const { return std::to_string(v_); }

private:
    static PrimeFieldElem raw(std::uint64_t v, std::uint64_t p) {
        PrimeFieldElem e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    void check_same(const PrimeFieldElem& o) const;

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

}  // namespace leibcheck
