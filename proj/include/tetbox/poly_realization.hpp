#pragma once

#include "tetbox/evaluation.hpp"
#include "tetbox/matrix.hpp"
#include "tetbox/module.hpp"
#include "tetbox/symmetry.hpp"

#include <array>
#include <string>
#include <vector>

namespace tetbox {

/// Four mutually distinct rationals beta_0..beta_3.
class BetaQuad {
  public:
    /// Throws IndicesNotDistinct if two betas coincide.
    explicit BetaQuad(std::array<Rational, 4> betas);
    /// "b0,b1,b2,b3".
    static BetaQuad parse(const std::string& text);

    const Rational& operator[](int i) const { return b_[check_vertex(i)]; }
    /// beta_i - beta_j
    Rational diff(int i, int j) const { return (*this)[i] - (*this)[j]; }
    std::string str() const;
    friend bool operator==(const BetaQuad&, const BetaQuad&) = default;

  private:
    std::array<Rational, 4> b_;
};

/// p z_0 + q z_1.
struct LinearForm {
    Rational p, q;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Homogeneous polynomial of degree d; coefficient n belongs to z_0^{d-n} z_1^n.
struct HomPoly {
    int d = 0;
    Vector coeffs{Rational(1)};

    static HomPoly from_linear(const LinearForm& f);
    static HomPoly one() { return {}; }
    HomPoly pow(int e) const;
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Rational& c, HomPoly h);
    friend HomPoly operator+(HomPoly a, const HomPoly& b);
    friend bool operator==(const HomPoly&, const HomPoly&) = default;
};

/// z_i in the coordinates (z_0, z_1), from sum z_i = 0 and sum beta_i z_i = 0.
LinearForm linear_form(const BetaQuad& betas, int i);

/// (beta_0 - beta_1)(beta_2 - beta_3) / ((beta_0 - beta_3)(beta_2 - beta_1)).
Rational cross_ratio(const BetaQuad& betas);

/// beta_1 = 0, beta_2 = 1, beta_3 = t for the first t = 2, 3, ... giving a
/// distinct quadruple with cross ratio a.
BetaQuad betas_for_param(const EvalParam& a);

/// Matrix of the derivation D_rs (z_r -> -z_r, z_s -> z_s) on P_1 in the
/// coordinates (z_0, z_1).
ExactMatrix derivation_on_linear(const BetaQuad& betas, int r, int s);

/// P_d on the monomial basis z_0^{d-n} z_1^n, x_rs acting as D_rs.
TetModule build_poly_module(int d, const BetaQuad& betas);

/// u_n = C(d,n) (b_j-b_k)^{d-n} (b_j-b_l)^n / (b_i-b_j)^d z_k^{d-n} z_l^n.
std::vector<HomPoly> bracket_basis_vectors(int d, const BetaQuad& betas, const BracketBasisId& b);

/// Matrix whose columns are the monomial coordinates of the given polynomials.
ExactMatrix coordinate_matrix(const std::vector<HomPoly>& polys);

/// Generator matrices of P_d re-expressed in the bracket basis b.
TetModule poly_module_in_bracket_basis(int d, const BetaQuad& betas, const BracketBasisId& b);

/// The bilinear form on P_d for which
///   <z_i^{d-r} z_j^r, z_i^{d-s} z_j^s> = delta_{r+s,d} (-1)^r C(d,r)^{-1} (b_k - b_l)^d,
/// with k, l ordered so that i -> 2, j -> 0, k -> 1, l -> 3 is even.
class PolyPairing {
  public:
    /// Throws IndicesNotDistinct if i == j.
    PolyPairing(int d, const BetaQuad& betas, int i, int j);
    /// Gram matrix on the monomial basis z_0^{d-n} z_1^n.
    const ExactMatrix& gram() const { return gram_; }
    Rational operator()(const HomPoly& u, const HomPoly& v) const;

  private:
    ExactMatrix gram_;
};

PolyPairing poly_gram(int d, const BetaQuad& betas, int i, int j);

/// Free pairings of eta_i = z_i^d under poly_gram.
EtaPairings poly_eta_pairings(int d, const BetaQuad& betas);

/// phi_sigma on P_d for sigma = (i j)(k l) in G, labelled with i = 0 and
/// k < l: z_i -> (b_j-b_k)/(b_i-b_k) z_j, z_j -> (b_i-b_l)/(b_j-b_l) z_i,
/// extended multiplicatively. Throws NotInG or IsIdentity.
ExactMatrix automorphism_for_sigma(int d, const BetaQuad& betas, const Perm4& sigma);

/// Same map for an explicit labelling (i,j,k,l) of sigma = (i j)(k l).
ExactMatrix automorphism_for_labelling(int d, const BetaQuad& betas, int i, int j, int k, int l);

} // namespace tetbox
