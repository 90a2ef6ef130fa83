#pragma once

#include "tetbox/evaluation.hpp"
#include "tetbox/intertwiner.hpp"
#include "tetbox/module.hpp"
#include "tetbox/poly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tetbox {

/// Kronecker sum: action(i,j) = u(i,j) (x) I + I (x) v(i,j). The left factor
/// indexes the slowest-varying coordinate.
TetModule tensor(const TetModule& u, const TetModule& v);

/// Nonempty list of evaluation modules to be tensored left to right.
struct TensorSpec {
    std::vector<EvalModuleSpec> factors;

    /// "(d1,a1);(d2,a2);..." with a_j written as p/q.
    static TensorSpec parse(const std::string& text);
    std::string str() const;
    bool parameters_distinct() const;
};

TetModule build_tensor(const TensorSpec& spec);

/// theta_0..theta_d: theta_i is the eigenvalue of (e-)^i (e+)^i on the lowest
/// component of the [1,3] decomposition, with e+ = (x13 + x30)/2 and
/// e- = (x31 + x12)/2.
struct ThetaSequence {
    Vector theta;
};

/// Throws NotIrreducible when the lowest [1,3] component is not a line.
ThetaSequence theta_sequence(const TetModule& m);

/// Sum of (-1)^i theta_i lambda^i / (i!)^2.
UniPoly drinfeld_polynomial(const TetModule& m);
UniPoly drinfeld_from_theta(const ThetaSequence& theta);

struct Unclassifiable {
    std::string reason;
};

/// Factors (d_j, a_j) read off the roots 1/a_j of the Drinfel'd polynomial,
/// sorted by descending d, then a by numerator and denominator. The caller is
/// responsible for irreducibility (commutant_dimension == 1).
std::variant<std::vector<EvalModuleSpec>, Unclassifiable> classify(const TetModule& m);

/// Scales g so that its first nonzero entry in row-major order is 1.
ExactMatrix normalize_form(ExactMatrix g);

/// Gram matrix G with M^T G = -G M for every generator, normalized. Throws
/// NoForm if no such G exists or it is degenerate, NotIrreducible if it is not
/// unique up to scalar.
ExactMatrix build_standard_form(const TetModule& m);

/// Gram matrix G with M(i,j)^T G = -G M(sigma i, sigma j), built as the
/// standard form composed with an intertwiner from the sigma-twist back to m.
/// Throws NotInG, IsIdentity, NotIrreducible, NoForm.
ExactMatrix build_sigma_form(const TetModule& m, const Perm4& sigma);

} // namespace tetbox
