#include "leibcheck/rational.hpp"

#include "leibcheck/error.hpp"

#include <cctype>

namespace leibcheck {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto valid = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t k = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) k = 1;
        if (k == part.size()) return false;
        for (; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false))
        throw Error(Errc::SyntaxError, "bad rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
    return Rational(mpq_class(n, d));
}

Rational Rational::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by 0");
    q_ /= o.q_;
    return *this;
}

bool rational_sqrt(const Rational& a, Rational& root) {
    if (a.sign() < 0) return false;
    mpz_class n = a.numerator(), d = a.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(mpq_class(rn, rd));
    return true;
}

}  // namespace leibcheck
