#include "tetbox/poly_realization.hpp"

#include "tetbox/error.hpp"

#include <sstream>

namespace tetbox {

BetaQuad::BetaQuad(std::array<Rational, 4> betas) : b_(std::move(betas)) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (b_[i] == b_[j])
                throw Error(ErrorCode::IndicesNotDistinct, "betas must be mutually distinct");
}

BetaQuad BetaQuad::parse(const std::string& text) {
    std::array<Rational, 4> b;
    std::size_t count = 0, start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (count == 4)
            throw Error(ErrorCode::Parse, "expected four betas in '" + text + "'");
        b[count++] = Rational::parse(piece);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (count != 4)
        throw Error(ErrorCode::Parse, "expected four betas in '" + text + "'");
    return BetaQuad(b);
}

std::string BetaQuad::str() const {
    return b_[0].str() + "," + b_[1].str() + "," + b_[2].str() + "," + b_[3].str();
}

HomPoly HomPoly::from_linear(const LinearForm& f) { return HomPoly{1, {f.p, f.q}}; }

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly out{a.d + b.d, Vector(static_cast<std::size_t>(a.d + b.d) + 1)};
    for (std::size_t s = 0; s < a.coeffs.size(); ++s) {
        if (a.coeffs[s].is_zero())
            continue;
        for (std::size_t t = 0; t < b.coeffs.size(); ++t)
            if (!b.coeffs[t].is_zero())
                out.coeffs[s + t].add_product(a.coeffs[s], b.coeffs[t]);
    }
    return out;
}

HomPoly operator*(const Rational& c, HomPoly h) {
    for (auto& x : h.coeffs)
        x *= c;
    return h;
}

HomPoly operator+(HomPoly a, const HomPoly& b) {
    if (a.d != b.d)
        throw Error(ErrorCode::ShapeMismatch, "adding polynomials of different degree");
    for (std::size_t n = 0; n < a.coeffs.size(); ++n)
        a.coeffs[n] += b.coeffs[n];
    return a;
}

HomPoly HomPoly::pow(int e) const {
    HomPoly out = HomPoly::one();
    for (int t = 0; t < e; ++t)
        out = out * *this;
    return out;
}

LinearForm linear_form(const BetaQuad& b, int i) {
    switch (check_vertex(i)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: {
        Rational den = b.diff(2, 3);
        return {b.diff(3, 0) / den, b.diff(3, 1) / den};
    }
    default: {
        Rational den = b.diff(2, 3);
        return {b.diff(0, 2) / den, b.diff(1, 2) / den};
    }
    }
}

Rational cross_ratio(const BetaQuad& b) {
    return b.diff(0, 1) * b.diff(2, 3) / (b.diff(0, 3) * b.diff(2, 1));
}

BetaQuad betas_for_param(const EvalParam& ap) {
    const Rational& a = ap.value();
    for (long t = 2;; ++t) {
        Rational den = a - Rational(1) + Rational(t);
        if (den.is_zero())
            continue;
        Rational b0 = a * Rational(t) / den;
        if (b0.is_zero() || b0.is_one() || b0 == Rational(t))
            continue;
        return BetaQuad({b0, Rational(0), Rational(1), Rational(t)});
    }
}

namespace {

ExactMatrix form_columns(const LinearForm& u, const LinearForm& v) { return ExactMatrix{{u.p, v.p}, {u.q, v.q}}; }

} // namespace

ExactMatrix derivation_on_linear(const BetaQuad& betas, int r, int s) {
    GenPair pair(r, s);
    ExactMatrix basis = form_columns(linear_form(betas, r), linear_form(betas, s));
    return basis * ExactMatrix::diagonal({Rational(-1), Rational(1)}) * inverse(basis);
}

TetModule build_poly_module(int d, const BetaQuad& betas) {
    if (d < 1)
        throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
    const std::size_t n1 = static_cast<std::size_t>(d) + 1;
    TetModule::Actions arr;
    for (const auto& pair : all_pairs()) {
        ExactMatrix d1 = derivation_on_linear(betas, pair.i, pair.j);
        const Rational &p0 = d1(0, 0), &q0 = d1(1, 0), &p1 = d1(0, 1), &q1 = d1(1, 1);
        ExactMatrix m(n1, n1);
        for (int n = 0; n <= d; ++n) {
            const std::size_t nn = static_cast<std::size_t>(n);
            m(nn, nn) = Rational(d - n) * p0 + Rational(n) * q1;
            if (n < d)
                m(nn + 1, nn) = Rational(d - n) * q0;
            if (n > 0)
                m(nn - 1, nn) = Rational(n) * p1;
        }
        arr[pair.index()] = std::move(m);
    }
    return TetModule(n1, std::move(arr), "P_" + std::to_string(d) + "(" + betas.str() + ")");
}

std::vector<HomPoly> bracket_basis_vectors(int d, const BetaQuad& b, const BracketBasisId& id) {
    const HomPoly zk = HomPoly::from_linear(linear_form(b, id.k));
    const HomPoly zl = HomPoly::from_linear(linear_form(b, id.l));
    const Rational scale = b.diff(id.i, id.j).pow(-d);
    std::vector<HomPoly> out;
    for (int n = 0; n <= d; ++n) {
        Rational c = binomial(d, n) * b.diff(id.j, id.k).pow(d - n) * b.diff(id.j, id.l).pow(n) * scale;
        out.push_back(c * (zk.pow(d - n) * zl.pow(n)));
    }
    return out;
}

ExactMatrix coordinate_matrix(const std::vector<HomPoly>& polys) {
    if (polys.empty())
        return {};
    ExactMatrix m(polys.front().coeffs.size(), polys.size());
    for (std::size_t c = 0; c < polys.size(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, c) = polys[c].coeffs[r];
    return m;
}

TetModule poly_module_in_bracket_basis(int d, const BetaQuad& betas, const BracketBasisId& b) {
    TetModule p = build_poly_module(d, betas);
    ExactMatrix u = coordinate_matrix(bracket_basis_vectors(d, betas, b));
    ExactMatrix u_inv = inverse(u);
    TetModule::Actions arr;
    for (const auto& pair : all_pairs())
        arr[pair.index()] = conjugate(p.action(pair), u, u_inv);
    return TetModule(p.dim(), std::move(arr), p.label() + " [" + b.str() + "]");
}

PolyPairing::PolyPairing(int d, const BetaQuad& betas, int i, int j) {
    GenPair pair(i, j);
    int k = -1, l = -1;
    for (int v = 0; v < 4; ++v)
        if (v != i && v != j)
            (k < 0 ? k : l) = v;
    std::array<int, 4> im{};
    im[i] = 2;
    im[j] = 0;
    im[k] = 1;
    im[l] = 3;
    if (!Perm4(im).is_even())
        std::swap(k, l);

    const std::size_t n1 = static_cast<std::size_t>(d) + 1;
    const Rational scale = betas.diff(k, l).pow(d);
    ExactMatrix g(n1, n1);
    for (int r = 0; r <= d; ++r) {
        Rational v = scale / binomial(d, r);
        g(static_cast<std::size_t>(r), static_cast<std::size_t>(d - r)) = r % 2 == 0 ? v : -v;
    }
    const HomPoly zi = HomPoly::from_linear(linear_form(betas, i));
    const HomPoly zj = HomPoly::from_linear(linear_form(betas, j));
    std::vector<HomPoly> basis;
    for (int r = 0; r <= d; ++r)
        basis.push_back(zi.pow(d - r) * zj.pow(r));
    ExactMatrix q_inv = inverse(coordinate_matrix(basis));
    gram_ = q_inv.transpose() * g * q_inv;
}

Rational PolyPairing::operator()(const HomPoly& u, const HomPoly& v) const {
    if (u.coeffs.size() != gram_.rows() || v.coeffs.size() != gram_.rows())
        throw Error(ErrorCode::ShapeMismatch, "pairing polynomials of the wrong degree");
    Vector gv = gram_ * v.coeffs;
    Rational s;
    for (std::size_t n = 0; n < gv.size(); ++n)
        s.add_product(u.coeffs[n], gv[n]);
    return s;
}

PolyPairing poly_gram(int d, const BetaQuad& betas, int i, int j) { return PolyPairing(d, betas, i, j); }

EtaPairings poly_eta_pairings(int d, const BetaQuad& betas) {
    PolyPairing form(d, betas, 0, 1);
    auto eta = [&](int i) { return HomPoly::from_linear(linear_form(betas, i)).pow(d); };
    EtaPairings p;
    p.p01 = form(eta(0), eta(1));
    p.p02 = form(eta(0), eta(2));
    p.p03 = form(eta(0), eta(3));
    p.p12 = form(eta(1), eta(2));
    return p;
}

ExactMatrix automorphism_for_labelling(int d, const BetaQuad& b, int i, int j, int k, int l) {
    BracketBasisId distinct(i, j, k, l);
    const LinearForm zi = linear_form(b, i), zj = linear_form(b, j);
    const Rational ci = b.diff(j, k) / b.diff(i, k);
    const Rational cj = b.diff(i, l) / b.diff(j, l);
    ExactMatrix images = form_columns({ci * zj.p, ci * zj.q}, {cj * zi.p, cj * zi.q});
    ExactMatrix f1 = images * inverse(form_columns(zi, zj));
    const HomPoly f0 = HomPoly::from_linear({f1(0, 0), f1(1, 0)});
    const HomPoly f1z = HomPoly::from_linear({f1(0, 1), f1(1, 1)});
    std::vector<HomPoly> cols;
    for (int n = 0; n <= d; ++n)
        cols.push_back(f0.pow(d - n) * f1z.pow(n));
    return coordinate_matrix(cols);
}

ExactMatrix automorphism_for_sigma(int d, const BetaQuad& betas, const Perm4& sigma) {
    if (sigma.is_identity())
        throw Error(ErrorCode::IsIdentity, "phi_sigma is defined for nonidentity sigma only");
    if (!is_in_G(sigma))
        throw Error(ErrorCode::NotInG, sigma.str() + " is not a double transposition");
    const int i = 0, j = sigma(0);
    int k = -1, l = -1;
    for (int v = 0; v < 4; ++v)
        if (v != i && v != j)
            (k < 0 ? k : l) = v;
    return automorphism_for_labelling(d, betas, i, j, k, l);
}

} // namespace tetbox
