#include "pgg/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace pgg {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// GMP rejects a leading '+'.
mpz_class parse_integer(const std::string& s) {
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(make_canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) throw ParseError("not a rational: '" + text + "'");
        return Rational(parse_integer(text), mpz_class(1));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + text + "'");
    if (parse_integer(den) == 0) throw ParseError("zero denominator: '" + text + "'");
    return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::pow(unsigned long exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    // num and den are coprime, so their powers are too.
    mpq_class out;
    out.get_num() = n;
    out.get_den() = d;
    return Rational(out);
}

Rational Rational::from_double_rounded(double x, unsigned long denominator) {
    if (denominator == 0) throw Error("zero rationalization denominator");
    if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
    const double scaled = std::floor(x * static_cast<double>(denominator) + 0.5);
    mpz_class n(scaled);
    return Rational(n, mpz_class(denominator));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::fraction_str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace pgg
