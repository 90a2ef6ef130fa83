#pragma once

#include "tetbox/poly.hpp"
#include "tetbox/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tetbox {

/// Dense row-major matrix over Q.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const Vector& entries);
    static ExactMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    /// Anti-diagonal matrix of ones.
    static ExactMatrix reversal(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_diagonal() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return data_; }

    Vector column(std::size_t c) const;
    std::vector<Vector> columns() const;
    Vector row(std::size_t r) const;

    ExactMatrix transpose() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const Rational& c);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& c) { return a *= c; }
    friend ExactMatrix operator*(const Rational& c, ExactMatrix a) { return a *= c; }
    ExactMatrix operator-() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend Vector operator*(const ExactMatrix& a, const Vector& v);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    /// Adds c*o in place (same shape).
    void add_scaled(const Rational& c, const ExactMatrix& o);

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivot is the first nonzero entry in column order.
RowEchelon rref(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);
/// Basis of the right null space, one vector per free column.
std::vector<Vector> kernel_basis(const ExactMatrix& m);
std::optional<ExactMatrix> try_inverse(const ExactMatrix& m);
/// Throws InvalidArgument for singular or non-square input.
ExactMatrix inverse(const ExactMatrix& m);
Rational determinant(const ExactMatrix& m);

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

/// a^{-1} m a, with a given together with its inverse.
ExactMatrix conjugate(const ExactMatrix& m, const ExactMatrix& a, const ExactMatrix& a_inv);

/// det(lambda I - m), computed through an upper Hessenberg reduction.
UniPoly characteristic_polynomial(const ExactMatrix& m);

struct Eigen {
    long value;
    std::size_t multiplicity;
};

/// Integer eigenvalues in ascending order when the characteristic polynomial
/// splits into integer linear factors, otherwise nullopt.
std::optional<std::vector<Eigen>> integer_spectrum(const ExactMatrix& m);

/// Homogeneous sparse linear system built one equation at a time; keeps an
/// echelon form keyed by leading column.
class SparseEchelon {
  public:
    using Row = std::vector<std::pair<std::size_t, Rational>>;

    explicit SparseEchelon(std::size_t unknowns) : unknowns_(unknowns), pivot_of_(unknowns, npos) {}

    /// Entries must have strictly increasing column indices.
    void add_equation(Row row);
    std::size_t unknowns() const { return unknowns_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t nullity() const { return unknowns_ - pivots_.size(); }
    std::vector<Vector> kernel() const;

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t unknowns_;
    std::vector<std::size_t> pivot_of_;
    std::vector<Row> pivots_;
};

} // namespace tetbox
