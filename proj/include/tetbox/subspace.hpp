#pragma once

#include "tetbox/matrix.hpp"

#include <cstddef>
#include <vector>

namespace tetbox {

/// Subspace of Q^n held as a basis in column echelon form: the transpose of the
/// reduced row echelon form of the transposed spanning set. Two subspaces are
/// equal iff their stored bases are equal.
class Subspace {
  public:
    Subspace() = default;
    /// Zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace column_span(const ExactMatrix& m);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const ExactMatrix& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

  private:
    std::size_t ambient_ = 0;
    ExactMatrix basis_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// m applied to every basis vector of s.
Subspace image(const ExactMatrix& m, const Subspace& s);
/// Kernel of m as a subspace of its column space domain.
Subspace null_space(const ExactMatrix& m);

} // namespace tetbox
