#pragma once

#include "tetbox/matrix.hpp"
#include "tetbox/poly.hpp"
#include "tetbox/subspace.hpp"
#include "tetbox/symmetry.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tetbox {

/// Finite-dimensional module given by one dim x dim matrix per generator x_ij.
class TetModule {
  public:
    using Actions = std::array<ExactMatrix, 12>;

    /// Matrices indexed by GenPair::index(). Throws ShapeMismatch unless every
    /// matrix is dim x dim.
    TetModule(std::size_t dim, Actions actions, std::string label = {});
    /// Throws ShapeMismatch if any of the 12 pairs is missing.
    static TetModule from_map(std::size_t dim, const std::map<GenPair, ExactMatrix>& actions,
                              std::string label = {});
    /// dim-dimensional module on which every generator acts as zero.
    static TetModule trivial(std::size_t dim = 1);

    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const ExactMatrix& action(const GenPair& p) const { return actions_[p.index()]; }
    const ExactMatrix& action(int i, int j) const { return action(GenPair(i, j)); }
    const Actions& actions() const { return actions_; }

    friend bool operator==(const TetModule& a, const TetModule& b) {
        return a.dim_ == b.dim_ && a.actions_ == b.actions_;
    }

  private:
    std::size_t dim_;
    Actions actions_;
    std::string label_;
};

enum class RelationKind { Antisymmetry, Bracket, DolanGrady };

struct RelationViolation {
    RelationKind kind;
    /// (i,j) for antisymmetry, (i,j,k) for brackets, (i,j,k,l) for Dolan-Grady.
    std::vector<int> indices;
    std::string describe() const;
};

struct RelationReport {
    std::vector<RelationViolation> violations;
    std::size_t checks = 0;
    bool ok() const { return violations.empty(); }
};

/// Checks x_ij + x_ji = 0 (6 pairs), [x_ij, x_jk] = 2x_ij + 2x_jk (24 triples)
/// and [x_ij,[x_ij,[x_ij,x_kl]]] = 4[x_ij,x_kl] (12 cases).
RelationReport verify_relations(const TetModule& m);

/// Eigenspace decomposition of x_ij; component n is the eigenspace for the
/// eigenvalue 2n - d.
struct Decomposition {
    std::vector<Subspace> components;
    int diameter = 0;
    std::vector<std::size_t> shape() const;
};

/// Nested subspaces U_0 within U_1 ... within U_d.
struct Flag {
    std::vector<Subspace> components;
};

/// Throws NotWellGraded unless x_ij is diagonalizable with spectrum exactly
/// {d - 2n : 0 <= n <= d} for some d.
Decomposition decomposition(const TetModule& m, int i, int j);
/// Throws FlagInconsistent if the three choices of j disagree.
Flag flag(const TetModule& m, int i);
/// Largest eigenvalue of x01, validated through decomposition(m, 0, 1).
int diameter(const TetModule& m);

/// action'(i,j) = action(sigma^{-1} i, sigma^{-1} j).
TetModule twist(const TetModule& m, const Perm4& sigma);
/// action'(i,j) = -transpose(action(i,j)).
TetModule dualize(const TetModule& m);

/// Sum of rho_n lambda^n, checked to be the same for all 12 decompositions.
UniPoly shape_polynomial(const TetModule& m);

/// Subspace containments of the x_rs-action table on the components of every
/// decomposition [i,j]; each string names one failure.
std::vector<std::string> action_table_violations(const TetModule& m);
/// (x_ij + x_jk) V_n within V_{n+1} on every [i,j] decomposition.
std::vector<std::string> raising_violations(const TetModule& m);
/// Component n of [i,j] equals U_n of flag [i] intersected with U_{d-n} of
/// flag [j].
std::vector<std::string> opposite_flag_violations(const TetModule& m);

} // namespace tetbox
