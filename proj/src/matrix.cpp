#include "tetbox/matrix.hpp"

#include "tetbox/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tetbox {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const Vector& entries) {
    ExactMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    ExactMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw Error(ErrorCode::ShapeMismatch, "column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

ExactMatrix ExactMatrix::reversal(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, n - 1 - i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool ExactMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && !(*this)(r, c).is_zero())
                return false;
    return true;
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

std::vector<Vector> ExactMatrix::columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

Vector ExactMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

static void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::ShapeMismatch, what);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require_same_shape(*this, o, "matrix addition");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] += o.data_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require_same_shape(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] -= o.data_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& c) {
    for (auto& x : data_)
        if (!x.is_zero())
            x *= c;
    return *this;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& x : m.data_)
        if (!x.is_zero())
            x = -x;
    return m;
}

void ExactMatrix::add_scaled(const Rational& c, const ExactMatrix& o) {
    require_same_shape(*this, o, "scaled addition");
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i].add_product(c, o.data_[i]);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::ShapeMismatch, "matrix product");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Rational* orow = &out.data_[i * out.cols_];
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.data_[i * a.cols_ + k];
            if (aik.is_zero())
                continue;
            const Rational* brow = &b.data_[k * b.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!brow[j].is_zero())
                    orow[j].add_product(aik, brow[j]);
        }
    }
    return out;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
    if (a.cols_ != v.size())
        throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a.data_[i * a.cols_ + k];
            if (!x.is_zero() && !v[k].is_zero())
                out[i].add_product(x, v[k]);
        }
    return out;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RowEchelon rref(ExactMatrix m) {
    RowEchelon out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero())
                    m(i, j).sub_product(f, m(r, j));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    RowEchelon e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ExactMatrix> try_inverse(const ExactMatrix& m) {
    if (!m.is_square())
        return std::nullopt;
    const std::size_t n = m.rows();
    RowEchelon e = rref(hstack(m, ExactMatrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

ExactMatrix inverse(const ExactMatrix& m) {
    auto inv = try_inverse(m);
    if (!inv)
        throw Error(ErrorCode::InvalidArgument, "matrix is not invertible");
    return *inv;
}

Rational determinant(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
    ExactMatrix m = a;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return Rational(0);
        if (p != c) {
            for (std::size_t j = c; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero())
                    m(i, j).sub_product(f, m(c, j));
        }
    }
    return det;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (x.is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero())
                        out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows())
        throw Error(ErrorCode::ShapeMismatch, "hstack row counts differ");
    ExactMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols())
        throw Error(ErrorCode::ShapeMismatch, "vstack column counts differ");
    ExactMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(a.rows() + r, c) = b(r, c);
    return out;
}

ExactMatrix conjugate(const ExactMatrix& m, const ExactMatrix& a, const ExactMatrix& a_inv) {
    return a_inv * (m * a);
}

UniPoly characteristic_polynomial(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(ErrorCode::ShapeMismatch, "characteristic polynomial of non-square matrix");
    const std::size_t n = a.rows();
    ExactMatrix h = a;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t p = m;
        while (p < n && h(p, m - 1).is_zero())
            ++p;
        if (p == n)
            continue;
        if (p != m) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(p, j), h(m, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(h(i, p), h(i, m));
        }
        Rational inv = h(m, m - 1).inverse();
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h(i, m - 1).is_zero())
                continue;
            Rational u = h(i, m - 1) * inv;
            for (std::size_t j = 0; j < n; ++j)
                if (!h(m, j).is_zero())
                    h(i, j).sub_product(u, h(m, j));
            for (std::size_t r = 0; r < n; ++r)
                if (!h(r, i).is_zero())
                    h(r, m).add_product(u, h(r, i));
        }
    }
    std::vector<UniPoly> p(n + 1);
    p[0] = UniPoly::constant(1);
    const UniPoly lambda = UniPoly::monomial(1, 1);
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = (lambda - UniPoly::constant(h(m - 1, m - 1))) * p[m - 1];
        Rational t = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            t *= h(i + 1, i);
            if (t.is_zero())
                break;
            Rational coeff = t * h(i, m - 1);
            if (!coeff.is_zero())
                p[m] -= coeff * p[i];
        }
    }
    return p[n];
}

std::optional<std::vector<Eigen>> integer_spectrum(const ExactMatrix& m) {
    UniPoly chi = characteristic_polynomial(m);
    for (const auto& c : chi.coefficients())
        if (!c.is_integer())
            return std::nullopt;
    // Every eigenvalue is bounded by the largest absolute row sum.
    Rational norm;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += m(r, c).abs();
        if (s > norm)
            norm = s;
    }
    mpz_class bound_z = norm.numerator() / norm.denominator();
    long bound = bound_z.fits_slong_p() ? bound_z.get_si() : std::numeric_limits<long>::max();
    bound = std::min<long>(bound, 1L << 20);

    std::vector<Eigen> out;
    for (long v = -bound; v <= bound && chi.degree() > 0; ++v) {
        std::size_t mult = 0;
        while (chi.degree() > 0 && chi.evaluate(Rational(v)).is_zero()) {
            chi = deflate(chi, Rational(v));
            ++mult;
        }
        if (mult)
            out.push_back({v, mult});
    }
    if (chi.degree() > 0)
        return std::nullopt;
    return out;
}

void SparseEchelon::add_equation(Row row) {
    while (!row.empty()) {
        std::size_t lead = row.front().first;
        std::size_t p = pivot_of_[lead];
        if (p == npos) {
            Rational inv = row.front().second.inverse();
            for (auto& e : row)
                e.second *= inv;
            pivot_of_[lead] = pivots_.size();
            pivots_.push_back(std::move(row));
            return;
        }
        // row -= row[lead] * pivot, merging sorted sparse rows.
        const Row& piv = pivots_[p];
        Rational f = row.front().second;
        Row merged;
        merged.reserve(row.size() + piv.size());
        std::size_t a = 1, b = 1;
        while (a < row.size() || b < piv.size()) {
            if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                merged.push_back(std::move(row[a++]));
            } else if (a == row.size() || piv[b].first < row[a].first) {
                merged.emplace_back(piv[b].first, -(f * piv[b].second));
                ++b;
            } else {
                Rational v = std::move(row[a].second);
                v.sub_product(f, piv[b].second);
                if (!v.is_zero())
                    merged.emplace_back(row[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
}

std::vector<Vector> SparseEchelon::kernel() const {
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < unknowns_; ++f) {
        if (pivot_of_[f] != npos)
            continue;
        Vector x(unknowns_);
        x[f] = 1;
        for (std::size_t c = unknowns_; c-- > 0;) {
            std::size_t p = pivot_of_[c];
            if (p == npos)
                continue;
            Rational s;
            const Row& row = pivots_[p];
            for (std::size_t t = 1; t < row.size(); ++t)
                if (!x[row[t].first].is_zero())
                    s.add_product(row[t].second, x[row[t].first]);
            x[c] = -s;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace tetbox
