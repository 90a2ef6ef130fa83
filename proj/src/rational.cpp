#include "tetbox/rational.hpp"

#include "tetbox/error.hpp"

#include <cctype>
#include <ostream>

namespace tetbox {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::IndicesNotDistinct: return "IndicesNotDistinct";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotWellGraded: return "NotWellGraded";
    case ErrorCode::FlagInconsistent: return "FlagInconsistent";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::PairingsInconsistent: return "PairingsInconsistent";
    case ErrorCode::NotInG: return "NotInG";
    case ErrorCode::IsIdentity: return "IsIdentity";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoForm: return "NoForm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0)
        throw Error(ErrorCode::DivisionByZero, "zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0)
        throw Error(ErrorCode::DivisionByZero, "zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

mpz_class to_mpz(std::string_view s) {
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
        throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0)
        throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return Rational(to_mpz(num), d);
}

std::string Rational::str() const {
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0)
        return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

Rational factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r, mpz_class(1));
}

} // namespace tetbox
