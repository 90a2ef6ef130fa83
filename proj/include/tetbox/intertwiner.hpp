#pragma once

#include "tetbox/matrix.hpp"
#include "tetbox/module.hpp"

#include <optional>
#include <vector>

namespace tetbox {

/// Basis of {T : T * u(i,j) = v(i,j) * T for every generator}; T is
/// v.dim() x u.dim().
std::vector<ExactMatrix> intertwiner_basis(const TetModule& u, const TetModule& v);

/// A nonzero intertwiner u -> v, or nullopt when only zero intertwines.
std::optional<ExactMatrix> solve_intertwiner(const TetModule& u, const TetModule& v);

/// Dimension of the space of matrices commuting with every generator.
std::size_t commutant_dimension(const TetModule& m);

} // namespace tetbox
