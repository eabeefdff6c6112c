#ifndef PW_RATIONAL_HPP
#define PW_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pw/field.hpp"

namespace pw {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(std::int64_t v) { return Rational(v); }
    static constexpr std::uint64_t characteristic() { return 0; }

    /// Parses "p" or "p/q" (optional leading sign on p). Throws ParseError,
    /// including on a zero denominator.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    /// this += a * b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

static_assert(Field<Rational>);

}  // namespace pw

#endif  // PW_RATIONAL_HPP
