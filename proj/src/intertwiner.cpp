#include "tetbox/intertwiner.hpp"

#include "tetbox/error.hpp"

#include <algorithm>

namespace tetbox {

namespace {

const std::array<GenPair, 6>& upper_pairs() {
    static const std::array<GenPair, 6> pairs{GenPair(0, 1), GenPair(0, 2), GenPair(0, 3),
                                              GenPair(1, 2), GenPair(1, 3), GenPair(2, 3)};
    return pairs;
}

bool antisymmetric(const TetModule& m) {
    for (const auto& p : upper_pairs())
        if (!(m.action(p) + m.action(p.reversed())).is_zero())
            return false;
    return true;
}

SparseEchelon::Row to_sparse(const Vector& v) {
    SparseEchelon::Row row;
    for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero())
            row.emplace_back(t, v[t]);
    return row;
}

ExactMatrix shifted(const ExactMatrix& x, const Rational& shift) {
    ExactMatrix out = x;
    for (std::size_t r = 0; r < x.rows(); ++r)
        out(r, r) -= shift;
    return out;
}

/// Schur-type shortcut. If x13 has a lowest eigenvalue with a one-dimensional
/// eigenspace in u and that eigenvector generates u, every intertwiner is fixed
/// by the image of the eigenvector, which lies in the matching eigenspace of v.
/// Returns nullopt when the shortcut does not apply.
std::optional<std::vector<ExactMatrix>> cyclic_intertwiners(const TetModule& u, const TetModule& v) {
    const ExactMatrix& x_u = u.action(1, 3);
    auto spectrum = integer_spectrum(x_u);
    if (!spectrum || spectrum->empty())
        return std::nullopt;
    Rational lowest(spectrum->front().value);
    auto low_u = kernel_basis(shifted(x_u, lowest));
    if (low_u.size() != 1)
        return std::nullopt;

    std::vector<Vector> basis{low_u.front()};
    std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};
    SparseEchelon span(u.dim());
    span.add_equation(to_sparse(basis.front()));
    for (std::size_t t = 0; t < basis.size() && basis.size() < u.dim(); ++t)
        for (std::size_t g = 0; g < upper_pairs().size() && basis.size() < u.dim(); ++g) {
            Vector w = u.action(upper_pairs()[g]) * basis[t];
            std::size_t before = span.rank();
            span.add_equation(to_sparse(w));
            if (span.rank() > before) {
                basis.push_back(std::move(w));
                parent.emplace_back(t, g);
            }
        }
    if (basis.size() < u.dim())
        return std::nullopt;

    auto low_v = kernel_basis(shifted(v.action(1, 3), lowest));
    if (low_v.empty())
        return std::vector<ExactMatrix>{};
    if (low_v.size() > 1)
        return std::nullopt;

    std::vector<Vector> image{low_v.front()};
    for (std::size_t t = 1; t < basis.size(); ++t)
        image.push_back(v.action(upper_pairs()[parent[t].second]) * image[parent[t].first]);
    ExactMatrix b = ExactMatrix::from_columns(basis, u.dim());
    ExactMatrix c = ExactMatrix::from_columns(image, v.dim());
    ExactMatrix t = c * inverse(b);
    for (const auto& p : all_pairs())
        if (t * u.action(p) != v.action(p) * t)
            return std::vector<ExactMatrix>{};
    return std::vector<ExactMatrix>{t};
}

/// Eigenbasis of x13 ordered by eigenvalue, when x13 is diagonalizable over Z.
struct Grading {
    ExactMatrix basis;
    ExactMatrix basis_inv;
    std::vector<long> weights;
    bool is_identity = false;
};

std::optional<Grading> grade(const TetModule& m) {
    const ExactMatrix& x = m.action(1, 3);
    Grading g;
    if (x.is_diagonal()) {
        for (std::size_t r = 0; r < m.dim(); ++r) {
            if (!x(r, r).is_integer())
                return std::nullopt;
            g.weights.push_back(x(r, r).numerator().get_si());
        }
        g.is_identity = true;
        return g;
    }
    auto spectrum = integer_spectrum(x);
    if (!spectrum)
        return std::nullopt;
    std::vector<Vector> cols;
    for (const auto& e : *spectrum) {
        auto k = kernel_basis(shifted(x, Rational(e.value)));
        if (k.size() != e.multiplicity)
            return std::nullopt;
        for (auto& v : k) {
            cols.push_back(std::move(v));
            g.weights.push_back(e.value);
        }
    }
    g.basis = ExactMatrix::from_columns(cols, m.dim());
    g.basis_inv = inverse(g.basis);
    return g;
}

ExactMatrix in_grading(const ExactMatrix& x, const Grading& g) {
    return g.is_identity ? x : conjugate(x, g.basis, g.basis_inv);
}

std::vector<ExactMatrix> solve_linear(const TetModule& u, const TetModule& v) {
    const std::size_t nu = u.dim(), nv = v.dim();
    auto gu = grade(u);
    auto gv = grade(v);
    const bool graded = gu && gv;

    // Unknown T'(r,c) is allowed only between equal x13-weights.
    std::vector<std::vector<long>> index(nv, std::vector<long>(nu, -1));
    std::size_t unknowns = 0;
    for (std::size_t r = 0; r < nv; ++r)
        for (std::size_t c = 0; c < nu; ++c)
            if (!graded || gu->weights[c] == gv->weights[r])
                index[r][c] = static_cast<long>(unknowns++);
    if (unknowns == 0)
        return {};

    std::vector<GenPair> gens{GenPair(0, 3), GenPair(1, 2), GenPair(0, 1), GenPair(0, 2), GenPair(2, 3)};
    if (!graded)
        gens.push_back(GenPair(1, 3));
    if (!antisymmetric(u) || !antisymmetric(v)) {
        gens.push_back(GenPair(1, 3));
        for (const auto& p : upper_pairs())
            gens.push_back(p.reversed());
    }

    // Equation (r,c) of T' U' - V' T' = 0 as a sparse row over unknowns.
    auto equation = [&](const ExactMatrix& up, const ExactMatrix& vp, std::size_t r, std::size_t c) {
        std::vector<std::pair<std::size_t, Rational>> terms;
        for (std::size_t k = 0; k < nu; ++k)
            if (index[r][k] >= 0 && !up(k, c).is_zero())
                terms.emplace_back(static_cast<std::size_t>(index[r][k]), up(k, c));
        for (std::size_t k = 0; k < nv; ++k)
            if (index[k][c] >= 0 && !vp(r, k).is_zero())
                terms.emplace_back(static_cast<std::size_t>(index[k][c]), -vp(r, k));
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseEchelon::Row row;
        for (auto& t : terms) {
            if (!row.empty() && row.back().first == t.first)
                row.back().second += t.second;
            else
                row.push_back(std::move(t));
        }
        std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
        return row;
    };

    // Current solution space as columns of an unknowns x k matrix; starts as
    // everything and is cut down generator by generator.
    std::optional<std::vector<Vector>> kernel;
    for (const auto& g : gens) {
        ExactMatrix up = graded ? in_grading(u.action(g), *gu) : u.action(g);
        ExactMatrix vp = graded ? in_grading(v.action(g), *gv) : v.action(g);
        if (!kernel) {
            SparseEchelon sys(unknowns);
            for (std::size_t r = 0; r < nv; ++r)
                for (std::size_t c = 0; c < nu; ++c) {
                    auto row = equation(up, vp, r, c);
                    if (!row.empty())
                        sys.add_equation(std::move(row));
                }
            kernel = sys.kernel();
        } else {
            const std::size_t k = kernel->size();
            SparseEchelon sys(k);
            for (std::size_t r = 0; r < nv && sys.nullity() > 0; ++r)
                for (std::size_t c = 0; c < nu && sys.nullity() > 0; ++c) {
                    auto row = equation(up, vp, r, c);
                    if (row.empty())
                        continue;
                    Vector reduced(k);
                    for (std::size_t b = 0; b < k; ++b)
                        for (const auto& [t, coeff] : row)
                            if (!(*kernel)[b][t].is_zero())
                                reduced[b].add_product(coeff, (*kernel)[b][t]);
                    auto sparse = to_sparse(reduced);
                    if (!sparse.empty())
                        sys.add_equation(std::move(sparse));
                }
            std::vector<Vector> next;
            for (const auto& comb : sys.kernel()) {
                Vector x(unknowns);
                for (std::size_t b = 0; b < k; ++b)
                    if (!comb[b].is_zero())
                        for (std::size_t t = 0; t < unknowns; ++t)
                            if (!(*kernel)[b][t].is_zero())
                                x[t].add_product(comb[b], (*kernel)[b][t]);
                next.push_back(std::move(x));
            }
            kernel = std::move(next);
        }
        if (kernel->empty())
            return {};
    }

    std::vector<ExactMatrix> out;
    for (const auto& x : *kernel) {
        ExactMatrix t(nv, nu);
        for (std::size_t r = 0; r < nv; ++r)
            for (std::size_t c = 0; c < nu; ++c)
                if (index[r][c] >= 0)
                    t(r, c) = x[static_cast<std::size_t>(index[r][c])];
        if (graded) {
            if (!gv->is_identity)
                t = gv->basis * t;
            if (!gu->is_identity)
                t = t * gu->basis_inv;
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::vector<ExactMatrix> intertwiner_basis(const TetModule& u, const TetModule& v) {
    if (auto fast = cyclic_intertwiners(u, v))
        return *fast;
    return solve_linear(u, v);
}

std::optional<ExactMatrix> solve_intertwiner(const TetModule& u, const TetModule& v) {
    auto basis = intertwiner_basis(u, v);
    if (basis.empty())
        return std::nullopt;
    return basis.front();
}

std::size_t commutant_dimension(const TetModule& m) { return intertwiner_basis(m, m).size(); }

} // namespace tetbox
