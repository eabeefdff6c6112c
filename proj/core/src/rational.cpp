#include "pw/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "pw/errors.hpp"

namespace pw {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::size_t offset) {
    if (!is_integer_literal(s)) {
        throw ParseError("malformed integer '" + std::string(s) + "'", offset);
    }
    std::string digits(s);
    if (digits.front() == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw PreconditionError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(parse_integer(text, 0)));
    }
    const auto num = parse_integer(text.substr(0, slash), 0);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("denominator must be an unsigned integer", slash + 1);
    }
    const auto den = parse_integer(den_text, slash + 1);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw SingularMatrixError("inverse of zero scalar");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(unsigned exponent) const {
    Rational result = one();
    Rational base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularMatrixError("division by zero scalar");
    q_ /= o.q_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

std::string Rational::to_string() const {
    return q_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace pw
