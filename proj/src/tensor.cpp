#include "tetbox/tensor.hpp"

#include "tetbox/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tetbox {

TetModule tensor(const TetModule& u, const TetModule& v) {
    const ExactMatrix iu = ExactMatrix::identity(u.dim());
    const ExactMatrix iv = ExactMatrix::identity(v.dim());
    TetModule::Actions arr;
    for (const auto& p : all_pairs())
        arr[p.index()] = kronecker(u.action(p), iv) + kronecker(iu, v.action(p));
    std::string label;
    if (!u.label().empty() && !v.label().empty())
        label = u.label() + " (x) " + v.label();
    return TetModule(u.dim() * v.dim(), std::move(arr), std::move(label));
}

TensorSpec TensorSpec::parse(const std::string& text) {
    TensorSpec spec;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (!spec.factors.empty()) {
            if (s[pos] != ';' || pos + 1 == s.size())
                throw Error(ErrorCode::Parse, "factors must be separated by a single ';' in '" + text + "'");
            ++pos;
        }
        if (s[pos] != '(')
            throw Error(ErrorCode::Parse, "expected '(' in tensor spec '" + text + "'");
        auto close = s.find(')', pos);
        auto comma = s.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw Error(ErrorCode::Parse, "expected (d,a) in tensor spec '" + text + "'");
        Rational d = Rational::parse(s.substr(pos + 1, comma - pos - 1));
        if (!d.is_integer() || !d.numerator().fits_sint_p())
            throw Error(ErrorCode::Parse, "diameter must be an integer in '" + text + "'");
        Rational a = Rational::parse(s.substr(comma + 1, close - comma - 1));
        spec.factors.emplace_back(static_cast<int>(d.numerator().get_si()), EvalParam(a));
        pos = close + 1;
    }
    if (spec.factors.empty())
        throw Error(ErrorCode::Parse, "tensor spec has no factors");
    return spec;
}

std::string TensorSpec::str() const {
    std::string out;
    for (const auto& f : factors)
        out += (out.empty() ? "" : ";") + ("(" + std::to_string(f.d) + "," + f.a.value().str() + ")");
    return out;
}

bool TensorSpec::parameters_distinct() const {
    std::set<Rational> seen;
    for (const auto& f : factors)
        if (!seen.insert(f.a.value()).second)
            return false;
    return true;
}

TetModule build_tensor(const TensorSpec& spec) {
    if (spec.factors.empty())
        throw Error(ErrorCode::InvalidArgument, "tensor spec has no factors");
    TetModule m = build_eval_module(spec.factors.front());
    for (std::size_t t = 1; t < spec.factors.size(); ++t)
        m = tensor(m, build_eval_module(spec.factors[t]));
    m.set_label(spec.str());
    return m;
}

ThetaSequence theta_sequence(const TetModule& m) {
    Decomposition dec = decomposition(m, 1, 3);
    const Subspace& low = dec.components.front();
    if (low.dim() != 1)
        throw Error(ErrorCode::NotIrreducible,
                    "lowest [1,3] component has dimension " + std::to_string(low.dim()));
    const Vector v = low.basis().column(0);
    std::size_t pivot = 0;
    while (v[pivot].is_zero())
        ++pivot;

    const Rational half(1, 2);
    ExactMatrix e_plus = m.action(1, 3) + m.action(3, 0);
    e_plus *= half;
    ExactMatrix e_minus = m.action(3, 1) + m.action(1, 2);
    e_minus *= half;

    ThetaSequence out;
    out.theta.push_back(1);
    Vector raised = v;
    for (int i = 1; i <= dec.diameter; ++i) {
        raised = e_plus * raised;
        Vector w = raised;
        for (int t = 0; t < i; ++t)
            w = e_minus * w;
        Rational theta = w[pivot] / v[pivot];
        for (std::size_t r = 0; r < v.size(); ++r)
            if (w[r] != theta * v[r])
                throw Error(ErrorCode::NotIrreducible, "(e-)^i (e+)^i does not preserve the lowest component");
        out.theta.push_back(std::move(theta));
    }
    return out;
}

UniPoly drinfeld_from_theta(const ThetaSequence& theta) {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < theta.theta.size(); ++i) {
        Rational f = factorial(static_cast<long>(i));
        Rational c = theta.theta[i] / (f * f);
        coeffs.push_back(i % 2 == 0 ? c : -c);
    }
    return UniPoly(std::move(coeffs));
}

UniPoly drinfeld_polynomial(const TetModule& m) { return drinfeld_from_theta(theta_sequence(m)); }

std::variant<std::vector<EvalModuleSpec>, Unclassifiable> classify(const TetModule& m) {
    const int d = diameter(m);
    UniPoly p = drinfeld_polynomial(m);
    if (p.evaluate(1).is_zero())
        return Unclassifiable{"Drinfel'd polynomial vanishes at 1"};
    if (p.degree() != d)
        return Unclassifiable{"Drinfel'd polynomial has degree " + std::to_string(p.degree()) + " but diameter is " +
                              std::to_string(d)};
    if (d == 0)
        return std::vector<EvalModuleSpec>{};
    RationalRoots roots = rational_roots(p);
    if (roots.remainder_degree() > 0)
        return Unclassifiable{"Drinfel'd polynomial " + p.str() + " has an irreducible factor of degree " +
                              std::to_string(roots.remainder_degree()) + " over Q"};
    std::vector<EvalModuleSpec> out;
    for (const auto& r : roots.roots)
        out.emplace_back(static_cast<int>(r.multiplicity), EvalParam(r.root.inverse()));
    std::sort(out.begin(), out.end(), [](const EvalModuleSpec& x, const EvalModuleSpec& y) {
        if (x.d != y.d)
            return x.d > y.d;
        const Rational &a = x.a.value(), &b = y.a.value();
        if (a.numerator() != b.numerator())
            return a.numerator() < b.numerator();
        return a.denominator() < b.denominator();
    });
    return out;
}

ExactMatrix normalize_form(ExactMatrix g) {
    for (const auto& x : g.entries())
        if (!x.is_zero()) {
            g *= x.inverse();
            return g;
        }
    return g;
}

namespace {

ExactMatrix unique_intertwiner(const TetModule& u, const TetModule& v, const char* what) {
    auto basis = intertwiner_basis(u, v);
    if (basis.empty())
        throw Error(ErrorCode::NoForm, std::string(what) + ": only the zero map intertwines");
    if (basis.size() > 1)
        throw Error(ErrorCode::NotIrreducible,
                    std::string(what) + ": solution space has dimension " + std::to_string(basis.size()));
    return basis.front();
}

} // namespace

ExactMatrix build_standard_form(const TetModule& m) {
    ExactMatrix g = normalize_form(unique_intertwiner(m, dualize(m), "standard form"));
    if (determinant(g).is_zero())
        throw Error(ErrorCode::NoForm, "standard form is degenerate");
    return g;
}

ExactMatrix build_sigma_form(const TetModule& m, const Perm4& sigma) {
    if (sigma.is_identity())
        throw Error(ErrorCode::IsIdentity, "sigma-form needs a nonidentity sigma");
    if (!is_in_G(sigma))
        throw Error(ErrorCode::NotInG, sigma.str() + " is not in G");
    ExactMatrix g = build_standard_form(m);
    ExactMatrix zeta = unique_intertwiner(twist(m, sigma), m, "sigma-twist");
    ExactMatrix out = normalize_form(g * zeta);
    if (determinant(out).is_zero())
        throw Error(ErrorCode::NoForm, "sigma-form is degenerate");
    return out;
}

} // namespace tetbox
