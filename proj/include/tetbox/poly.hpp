#pragma once

#include "tetbox/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tetbox {

/// Univariate polynomial over Q in the indeterminate lambda. Coefficient n is
/// the coefficient of lambda^n; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coefficients);
    explicit UniPoly(std::vector<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t power);
    /// 1 + lambda + ... + lambda^d
    static UniPoly geometric(std::size_t d);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t n) const;
    Rational leading() const;

    Rational evaluate(const Rational& x) const;
    bool is_palindromic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    UniPoly pow(std::size_t exponent) const;

    /// Human-readable form, e.g. "1 - 6*l + 9*l^2".
    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly poly_mul(const UniPoly& p, const UniPoly& q);

struct RootMultiplicity {
    Rational root;
    std::size_t multiplicity = 0;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
    /// Sorted ascending by root.
    std::vector<RootMultiplicity> roots;
    /// p divided by prod (lambda - r)^m, up to the leading unit: the factor with
    /// no rational roots.
    UniPoly remainder;
    std::size_t remainder_degree() const { return static_cast<std::size_t>(remainder.degree()); }
};

/// All rational roots of p with exact multiplicities. Candidates come from the
/// rational root theorem applied to the integer-cleared polynomial; each hit is
/// deflated exactly. Throws ZeroPolynomial on p = 0.
RationalRoots rational_roots(const UniPoly& p);

/// Exact division p / (lambda - r); the remainder must be zero (checked).
UniPoly deflate(const UniPoly& p, const Rational& r);

} // namespace tetbox
