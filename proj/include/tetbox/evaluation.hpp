#pragma once

#include "tetbox/matrix.hpp"
#include "tetbox/module.hpp"
#include "tetbox/symmetry.hpp"

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tetbox {

/// cx*x + cy*y + cz*z in the equitable basis of sl2, where
/// [x,y] = 2x+2y, [y,z] = 2y+2z, [z,x] = 2z+2x.
struct Sl2Element {
    Rational cx, cy, cz;

    friend Sl2Element operator+(const Sl2Element& a, const Sl2Element& b) {
        return {a.cx + b.cx, a.cy + b.cy, a.cz + b.cz};
    }
    friend Sl2Element operator*(const Rational& c, const Sl2Element& e) { return {c * e.cx, c * e.cy, c * e.cz}; }
    Sl2Element operator-() const { return {-cx, -cy, -cz}; }
    friend bool operator==(const Sl2Element&, const Sl2Element&) = default;
};

Sl2Element sl2_bracket(const Sl2Element& a, const Sl2Element& b);

/// Matrix of e on the (d+1)-dimensional irreducible sl2-module with basis
/// v_0..v_d; column n holds the image of v_n:
///   x v_n = (2n-d) v_n + 2(d-n+1) v_{n-1}
///   y v_n = (2n-d) v_n - 2(n+1) v_{n+1}
///   z v_n = (d-2n) v_n
ExactMatrix sl2_matrix(const Sl2Element& e, int d);

/// Image of x_ij under the evaluation homomorphism with parameter a.
Sl2Element ev_map(const EvalParam& a, const GenPair& pair);

struct EvalModuleSpec {
    int d;
    EvalParam a;

    /// Throws InvalidArgument for d < 1.
    EvalModuleSpec(int d_, EvalParam a_);
    std::string str() const;
    friend bool operator==(const EvalModuleSpec&, const EvalModuleSpec&) = default;
};

/// V_d(a) in the standard basis v_0..v_d.
TetModule build_eval_module(const EvalModuleSpec& spec);

struct NotEvaluation {
    std::string reason;
};

/// The evaluation parameter of m, recovered from a x01 + (1-a) x02 - x03 = 0
/// and confirmed against the remaining three vanishing expressions and the
/// (1,...,1) shape. Throws Inconsistent when the input cannot be a module.
std::variant<EvalParam, NotEvaluation> extract_eval_param(const TetModule& m);

/// Label (i,j,k,l) of an [i,j,k,l]-basis.
struct BracketBasisId {
    int i, j, k, l;

    /// Throws IndicesNotDistinct.
    BracketBasisId(int i_, int j_, int k_, int l_);
    /// "i,j,k,l".
    static BracketBasisId parse(const std::string& text);
    static const std::vector<BracketBasisId>& all();
    std::array<int, 4> as_array() const { return {i, j, k, l}; }
    std::string str() const;

    BracketBasisId swap_first() const { return {j, i, k, l}; }
    BracketBasisId swap_middle() const { return {i, k, j, l}; }
    BracketBasisId swap_last() const { return {i, j, l, k}; }

    friend auto operator<=>(const BracketBasisId&, const BracketBasisId&) = default;
};

/// The 12 generator matrices with respect to an [i,j,k,l]-basis of V_d(a),
/// from the closed-form table with alpha = relative(a; i,j,k,l).
std::map<GenPair, ExactMatrix> bracket_basis_matrices(const EvalModuleSpec& spec, const BracketBasisId& b);
TetModule bracket_basis_module(const EvalModuleSpec& spec, const BracketBasisId& b);

/// The free pairings <eta0,eta1>, <eta0,eta2>, <eta0,eta3>, <eta1,eta2>.
struct EtaPairings {
    Rational p01 = 1, p02 = 1, p03 = 1, p12 = 1;

    /// All 16 pairings <eta_i, eta_j>: zero on the diagonal, (-1)^d symmetry,
    ///   <eta2,eta3> = a^d <eta0,eta3><eta2,eta1>/<eta0,eta1>
    ///   <eta1,eta3> = (1-a)^d <eta0,eta3><eta1,eta2>/<eta0,eta2>.
    /// Throws PairingsInconsistent if a free value is zero.
    std::array<std::array<Rational, 4>, 4> table(const EvalModuleSpec& spec) const;
};

/// Transition matrix T from basis `from` (u) to basis `to` (v), meaning
/// v_s = sum_r T(r,s) u_r. Adjacent swaps use the closed forms; other pairs
/// compose a shortest chain of swaps.
ExactMatrix transition_matrix(const EvalModuleSpec& spec, const BracketBasisId& from, const BracketBasisId& to,
                              const EtaPairings& pairings = {});

/// Gram matrix of the standard form on v_0..v_d:
/// (r,s) entry delta_{r+s,d} (-1)^r C(d,r).
ExactMatrix standard_form_gram(const EvalModuleSpec& spec);

} // namespace tetbox
