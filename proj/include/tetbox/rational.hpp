#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tetbox {

/// Exact arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (GMP canonical form).
class Rational {
  public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}

    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    /// "p/q" in lowest terms, denominator omitted when it is 1.
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Throws DivisionByZero on zero.
    Rational inverse() const;
    Rational pow(long exponent) const;
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Adds a*b to this value without building a temporary Rational.
    void add_product(const Rational& a, const Rational& b);
    void sub_product(const Rational& a, const Rational& b);

  private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vector = std::vector<Rational>;

/// Binomial coefficient C(n, k) computed exactly; zero outside 0 <= k <= n.
Rational binomial(long n, long k);
Rational factorial(long n);

} // namespace tetbox

template <>
struct std::hash<tetbox::Rational> {
    std::size_t operator()(const tetbox::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
