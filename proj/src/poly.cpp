#include "tetbox/poly.hpp"

#include "tetbox/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tetbox {

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::geometric(std::size_t d) { return UniPoly(std::vector<Rational>(d + 1, Rational(1))); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

bool UniPoly::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    std::vector<Rational> out = p.coeffs_;
    for (auto& x : out)
        x *= c;
    return UniPoly(std::move(out));
}

UniPoly poly_mul(const UniPoly& p, const UniPoly& q) { return p * q; }

UniPoly UniPoly::pow(std::size_t exponent) const {
    UniPoly result = UniPoly::constant(1);
    for (std::size_t i = 0; i < exponent; ++i)
        result = result * *this;
    return result;
}

std::string UniPoly::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Rational& c = coeffs_[n];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (n == 0 || !mag.is_one())
            os << mag.str();
        if (n > 0) {
            if (!mag.is_one())
                os << "*";
            os << "l";
            if (n > 1)
                os << "^" << n;
        }
    }
    return os.str();
}

UniPoly deflate(const UniPoly& p, const Rational& r) {
    const auto& c = p.coefficients();
    if (c.empty())
        return UniPoly();
    std::vector<Rational> q(c.size() - 1);
    Rational carry;
    for (std::size_t i = c.size(); i-- > 0;) {
        Rational next = c[i] + carry * r;
        if (i == 0) {
            if (!next.is_zero())
                throw Error(ErrorCode::Inconsistent, "deflation by non-root " + r.str());
        } else {
            q[i - 1] = next;
        }
        carry = next;
    }
    return UniPoly(std::move(q));
}

namespace {

/// Prime factorisation by trial division with a Pollard-rho fallback for large
/// cofactors.
void factor_into(mpz_class n, std::vector<mpz_class>& primes);

mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto f = [&](const mpz_class& v) {
            mpz_class r = (v * v + c) % n;
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
    }
}

void factor_into(mpz_class n, std::vector<mpz_class>& primes) {
    if (n < 2)
        return;
    for (unsigned long p = 2; p < 100000; ++p) {
        if (mpz_class(p) * p > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        primes.push_back(n);
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> primes;
    factor_into(abs(n), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<mpz_class> divs{1};
    std::size_t i = 0;
    while (i < primes.size()) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i])
            ++j;
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (std::size_t e = i; e < j; ++e) {
            pk *= primes[i];
            for (std::size_t t = 0; t < base; ++t)
                divs.push_back(divs[t] * pk);
        }
        i = j;
    }
    return divs;
}

} // namespace

RationalRoots rational_roots(const UniPoly& p) {
    if (p.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "rational_roots of the zero polynomial");

    RationalRoots out;
    UniPoly rest = p;

    std::size_t zero_mult = 0;
    while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
        rest = deflate(rest, Rational(0));
        ++zero_mult;
    }
    if (zero_mult > 0)
        out.roots.push_back({Rational(0), zero_mult});

    if (rest.degree() > 0) {
        // Clear denominators: any rational root p/q of the factor in lowest terms
        // has p | a0 and q | an for the integer-scaled polynomial.
        mpz_class lcm = 1;
        for (const auto& c : rest.coefficients())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_class a0 = (rest.coefficient(0) * Rational(lcm, 1)).numerator();
        mpz_class an = (rest.leading() * Rational(lcm, 1)).numerator();

        std::set<Rational> candidates;
        auto num_divs = divisors(a0);
        auto den_divs = divisors(an);
        for (const auto& q : den_divs)
            for (const auto& n : num_divs) {
                candidates.insert(Rational(n, q));
                candidates.insert(Rational(mpz_class(-n), q));
            }

        for (const auto& r : candidates) {
            std::size_t mult = 0;
            while (rest.degree() > 0 && rest.evaluate(r).is_zero()) {
                rest = deflate(rest, r);
                ++mult;
            }
            if (mult > 0)
                out.roots.push_back({r, mult});
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
    out.remainder = rest;
    return out;
}

} // namespace tetbox
