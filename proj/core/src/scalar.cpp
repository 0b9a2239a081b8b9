#include "leibcheck/scalar.hpp"

#include "leibcheck/error.hpp"

namespace leibcheck {

std::optional<Gaussian> gaussian_sqrt(const Gaussian& a) {
    if (a.is_zero()) return Gaussian();
    const Rational& x = a.re();
    const Rational& y = a.im();
    Rational m;
    if (!rational_sqrt(a.norm(), m)) return std::nullopt;
    if (y.is_zero()) {
        Rational r;
        if (x.sign() > 0 && rational_sqrt(x, r)) return Gaussian(r);
        if (x.sign() < 0 && rational_sqrt(-x, r)) return Gaussian(Rational(0), r);
        return std::nullopt;
    }
    // u^2 - v^2 = x, 2uv = y, u^2 + v^2 = |a|
    Rational u;
    if (!rational_sqrt((x + m) / Rational(2), u)) return std::nullopt;
    Rational v = y / (Rational(2) * u);
    return Gaussian(u, v);
}

namespace {

struct GInt {
    mpz_class re, im;
};

// q divides g in Z[i]; on success g becomes g / q
bool divide_exact(GInt& g, const GInt& q) {
    mpz_class n = q.re * q.re + q.im * q.im;
    mpz_class re = g.re * q.re + g.im * q.im;
    mpz_class im = g.im * q.re - g.re * q.im;
    if (re % n != 0 || im % n != 0) return false;
    g = {re / n, im / n};
    return true;
}

GInt mul(const GInt& x, const GInt& y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }

Gaussian to_gaussian(const GInt& g) { return Gaussian(Rational(g.re), Rational(g.im)); }

// p = a^2 + b^2 for a prime p = 1 mod 4
GInt two_squares(unsigned long p) {
    for (unsigned long a = 1; a * a < p; ++a) {
        mpz_class rest = p - a * a, b = sqrt(rest);
        if (b * b == rest) return {mpz_class(a), b};
    }
    return {mpz_class(p), 0};
}

}  // namespace

RadicandForm reduce_radicand(const Gaussian& d) {
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "zero radicand");
    mpz_class den = lcm(d.re().denominator(), d.im().denominator());
    GInt g{d.re().numerator() * (den / d.re().denominator()) * den, d.im().numerator() * (den / d.im().denominator()) * den};
    GInt s{1, 0};  // d = (s / den)^2 * g throughout

    auto strip = [&](const GInt& pi) {
        GInt sq = mul(pi, pi);
        while (divide_exact(g, sq)) s = mul(s, pi);
    };
    strip({1, 1});
    mpz_class n = g.re * g.re + g.im * g.im;
    constexpr unsigned long kTrialLimit = 1'000'000;  // beyond this the form is still correct, just not minimal
    for (unsigned long p = 3; p <= kTrialLimit && mpz_class(p) * p <= n; p += 2) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        if (p % 4 == 3) {
            strip({mpz_class(p), 0});
        } else {
            GInt pi = two_squares(p);
            strip(pi);
            strip({pi.re, -pi.im});
        }
    }
    // -1 = i^2, so the sign of g is free
    if (g.re < 0 || (g.re == 0 && g.im < 0)) {
        g = {-g.re, -g.im};
        s = mul(s, {0, 1});
    }
    return {to_gaussian(s) / Gaussian(Rational(den)), to_gaussian(g)};
}

SquareRoot sqrt_in_field(const Gaussian& a) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "sqrt_in_field requires a nonzero argument");
    if (auto r = gaussian_sqrt(a)) return {true, QuadExt(*r)};
    auto [s, g] = reduce_radicand(a);
    return {false, QuadExt(s) * QuadExt::sqrt_of(g)};
}

PrimeFieldElem reduce_mod_p(const Gaussian& a, std::uint64_t p) {
    std::uint64_t r = sqrt_minus_one(p);
    mpz_class mp(static_cast<unsigned long>(p));
    auto red = [&](const Rational& q) {
        mpz_class den = q.denominator();
        if (den % mp == 0)
            throw Error(Errc::DenominatorDividesP, q.to_string() + " mod " + std::to_string(p));
        mpz_class n = q.numerator() % mp;
        if (n < 0) n += mp;
        mpz_class d = den % mp;
        PrimeFieldElem num(static_cast<std::int64_t>(n.get_ui()), p);
        PrimeFieldElem dd(static_cast<std::int64_t>(d.get_ui()), p);
        return num / dd;
    };
    return red(a.re()) + red(a.im()) * PrimeFieldElem(static_cast<std::int64_t>(r), p);
}

}  // namespace leibcheck
