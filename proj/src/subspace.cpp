#include "tetbox/subspace.hpp"

#include "tetbox/error.hpp"

namespace tetbox {

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    ExactMatrix rows(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient)
            throw Error(ErrorCode::ShapeMismatch, "vector length differs from ambient dimension");
        for (std::size_t c = 0; c < ambient; ++c)
            rows(r, c) = vectors[r][c];
    }
    RowEchelon e = rref(std::move(rows));
    ExactMatrix basis(ambient, e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t c = 0; c < ambient; ++c)
            basis(c, k) = e.reduced(k, c);
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::column_span(const ExactMatrix& m) { return span(m.columns(), m.rows()); }

Subspace Subspace::whole(std::size_t ambient) { return column_span(ExactMatrix::identity(ambient)); }

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::ShapeMismatch, "vector length differs from ambient dimension");
    // The echelon basis makes membership a back-substitution: the coefficient
    // of basis vector k is the entry of v at that vector's pivot.
    Vector rest = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        std::size_t p = 0;
        while (basis_(p, k).is_zero())
            ++p;
        Rational coeff = rest[p];
        if (coeff.is_zero())
            continue;
        for (std::size_t r = 0; r < ambient_; ++r)
            if (!basis_(r, k).is_zero())
                rest[r].sub_product(coeff, basis_(r, k));
    }
    for (const auto& x : rest)
        if (!x.is_zero())
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t k = 0; k < other.dim(); ++k)
        if (!contains(other.basis_.column(k)))
            return false;
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorCode::ShapeMismatch, "subspace sum across ambient spaces");
    auto vs = a.basis().columns();
    auto ws = b.basis().columns();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return Subspace::span(vs, a.ambient());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorCode::ShapeMismatch, "subspace intersection across ambient spaces");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(a.ambient());
    // Kernel of [A | -B] gives pairs (x, y) with A x = B y.
    ExactMatrix stacked = hstack(a.basis(), -b.basis());
    std::vector<Vector> out;
    for (const auto& k : kernel_basis(stacked)) {
        Vector x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        out.push_back(a.basis() * x);
    }
    return Subspace::span(out, a.ambient());
}

Subspace image(const ExactMatrix& m, const Subspace& s) {
    if (s.dim() == 0)
        return Subspace(m.rows());
    return Subspace::column_span(m * s.basis());
}

Subspace null_space(const ExactMatrix& m) { return Subspace::span(kernel_basis(m), m.cols()); }

} // namespace tetbox
