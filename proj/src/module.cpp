#include "tetbox/module.hpp"

#include "tetbox/error.hpp"

#include <optional>
#include <sstream>

namespace tetbox {

TetModule::TetModule(std::size_t dim, Actions actions, std::string label)
    : dim_(dim), actions_(std::move(actions)), label_(std::move(label)) {
    if (dim_ == 0)
        throw Error(ErrorCode::ShapeMismatch, "module dimension must be positive");
    for (const auto& p : all_pairs()) {
        const auto& a = actions_[p.index()];
        if (a.rows() != dim_ || a.cols() != dim_)
            throw Error(ErrorCode::ShapeMismatch, p.key() + " is " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + ", expected " +
                                                      std::to_string(dim_) + "x" + std::to_string(dim_));
    }
}

TetModule TetModule::from_map(std::size_t dim, const std::map<GenPair, ExactMatrix>& actions, std::string label) {
    Actions arr;
    for (const auto& p : all_pairs()) {
        auto it = actions.find(p);
        if (it == actions.end())
            throw Error(ErrorCode::ShapeMismatch, "missing action for " + p.key());
        arr[p.index()] = it->second;
    }
    return TetModule(dim, std::move(arr), std::move(label));
}

TetModule TetModule::trivial(std::size_t dim) {
    Actions arr;
    arr.fill(ExactMatrix(dim, dim));
    return TetModule(dim, std::move(arr), "trivial");
}

std::string RelationViolation::describe() const {
    std::ostringstream os;
    auto x = [](int a, int b) { return "x" + std::to_string(a) + std::to_string(b); };
    switch (kind) {
    case RelationKind::Antisymmetry:
        os << "antisymmetry: " << x(indices[0], indices[1]) << " + " << x(indices[1], indices[0]) << " != 0";
        break;
    case RelationKind::Bracket:
        os << "bracket: [" << x(indices[0], indices[1]) << ", " << x(indices[1], indices[2]) << "] != 2"
           << x(indices[0], indices[1]) << " + 2" << x(indices[1], indices[2]);
        break;
    case RelationKind::DolanGrady:
        os << "Dolan-Grady: [" << x(indices[0], indices[1]) << ", [" << x(indices[0], indices[1]) << ", ["
           << x(indices[0], indices[1]) << ", " << x(indices[2], indices[3]) << "]]] != 4["
           << x(indices[0], indices[1]) << ", " << x(indices[2], indices[3]) << "]";
        break;
    }
    return os.str();
}

RelationReport verify_relations(const TetModule& m) {
    RelationReport report;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            ++report.checks;
            if (!(m.action(i, j) + m.action(j, i)).is_zero())
                report.violations.push_back({RelationKind::Antisymmetry, {i, j}});
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                ++report.checks;
                const auto& a = m.action(i, j);
                const auto& b = m.action(j, k);
                ExactMatrix lhs = commutator(a, b);
                lhs.add_scaled(-2, a);
                lhs.add_scaled(-2, b);
                if (!lhs.is_zero())
                    report.violations.push_back({RelationKind::Bracket, {i, j, k}});
            }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                continue;
            int k = -1, l = -1;
            for (int v = 0; v < 4; ++v)
                if (v != i && v != j)
                    (k < 0 ? k : l) = v;
            ++report.checks;
            const auto& a = m.action(i, j);
            ExactMatrix c1 = commutator(a, m.action(k, l));
            ExactMatrix c3 = commutator(a, commutator(a, c1));
            c3.add_scaled(-4, c1);
            if (!c3.is_zero())
                report.violations.push_back({RelationKind::DolanGrady, {i, j, k, l}});
        }
    return report;
}

std::vector<std::size_t> Decomposition::shape() const {
    std::vector<std::size_t> out;
    for (const auto& c : components)
        out.push_back(c.dim());
    return out;
}

Decomposition decomposition(const TetModule& m, int i, int j) {
    const ExactMatrix& x = m.action(i, j);
    auto spectrum = integer_spectrum(x);
    const std::string where = "x" + std::to_string(i) + std::to_string(j);
    if (!spectrum || spectrum->empty())
        throw Error(ErrorCode::NotWellGraded, where + " has non-integral spectrum");
    long d = spectrum->back().value;
    if (d < 0 || static_cast<std::size_t>(d) + 1 != spectrum->size())
        throw Error(ErrorCode::NotWellGraded, where + " spectrum is not {d-2n}");
    Decomposition out;
    out.diameter = static_cast<int>(d);
    std::size_t total = 0;
    for (long n = 0; n <= d; ++n) {
        const Eigen& e = (*spectrum)[static_cast<std::size_t>(n)];
        if (e.value != 2 * n - d)
            throw Error(ErrorCode::NotWellGraded, where + " spectrum is not {d-2n}");
        ExactMatrix shifted = x;
        for (std::size_t r = 0; r < m.dim(); ++r)
            shifted(r, r) -= Rational(e.value);
        Subspace eig = null_space(shifted);
        if (eig.dim() != e.multiplicity)
            throw Error(ErrorCode::NotWellGraded, where + " is not diagonalizable");
        total += eig.dim();
        out.components.push_back(std::move(eig));
    }
    if (total != m.dim())
        throw Error(ErrorCode::NotWellGraded, where + " eigenspaces do not span");
    return out;
}

namespace {

std::vector<Subspace> partial_sums(const Decomposition& dec) {
    std::vector<Subspace> out;
    for (const auto& c : dec.components)
        out.push_back(out.empty() ? c : out.back() + c);
    return out;
}

} // namespace

Flag flag(const TetModule& m, int i) {
    check_vertex(i);
    std::optional<std::vector<Subspace>> first;
    for (int j = 0; j < 4; ++j) {
        if (j == i)
            continue;
        auto sums = partial_sums(decomposition(m, i, j));
        if (!first)
            first = std::move(sums);
        else if (*first != sums)
            throw Error(ErrorCode::FlagInconsistent,
                        "flag [" + std::to_string(i) + "] depends on the choice of partner index");
    }
    return Flag{std::move(*first)};
}

int diameter(const TetModule& m) { return decomposition(m, 0, 1).diameter; }

TetModule twist(const TetModule& m, const Perm4& sigma) {
    Perm4 inv = sigma.inverse();
    TetModule::Actions arr;
    for (const auto& p : all_pairs())
        arr[p.index()] = m.action(inv(p));
    std::string label = m.label().empty() ? std::string() : "twist(" + m.label() + ", " + sigma.str() + ")";
    return TetModule(m.dim(), std::move(arr), std::move(label));
}

TetModule dualize(const TetModule& m) {
    TetModule::Actions arr;
    for (const auto& p : all_pairs())
        arr[p.index()] = -m.action(p).transpose();
    std::string label = m.label().empty() ? std::string() : "dual(" + m.label() + ")";
    return TetModule(m.dim(), std::move(arr), std::move(label));
}

UniPoly shape_polynomial(const TetModule& m) {
    std::optional<std::vector<std::size_t>> shape;
    for (const auto& p : all_pairs()) {
        auto s = decomposition(m, p.i, p.j).shape();
        if (!shape)
            shape = s;
        else if (*shape != s)
            throw Error(ErrorCode::NotWellGraded, "shape differs between generators");
    }
    std::vector<Rational> coeffs;
    for (auto rho : *shape)
        coeffs.emplace_back(static_cast<long>(rho));
    return UniPoly(std::move(coeffs));
}

namespace {

std::string pair_name(int a, int b) { return "x" + std::to_string(a) + std::to_string(b); }

ExactMatrix shifted(const ExactMatrix& x, long shift) {
    ExactMatrix out = x;
    for (std::size_t r = 0; r < x.rows(); ++r)
        out(r, r) -= Rational(shift);
    return out;
}

} // namespace

std::vector<std::string> action_table_violations(const TetModule& m) {
    std::vector<std::string> out;
    for (const auto& ij : all_pairs()) {
        const int i = ij.i, j = ij.j;
        Decomposition dec = decomposition(m, i, j);
        const long d = dec.diameter;
        const Subspace zero(m.dim());
        auto comp = [&](long n) -> const Subspace& {
            return (n < 0 || n > d) ? zero : dec.components[static_cast<std::size_t>(n)];
        };
        for (const auto& rs : all_pairs()) {
            const int r = rs.i, s = rs.j;
            const ExactMatrix& x = m.action(r, s);
            for (long n = 0; n <= d; ++n) {
                const Subspace& vn = comp(n);
                bool ok = true;
                if (r == i && s == j)
                    ok = image(shifted(x, 2 * n - d), vn).dim() == 0;
                else if (r == j && s == i)
                    ok = image(shifted(x, d - 2 * n), vn).dim() == 0;
                else if (r == j)
                    ok = comp(n + 1).contains(image(shifted(x, d - 2 * n), vn));
                else if (s == j)
                    ok = comp(n + 1).contains(image(shifted(x, 2 * n - d), vn));
                else if (r == i)
                    ok = comp(n - 1).contains(image(shifted(x, 2 * n - d), vn));
                else if (s == i)
                    ok = comp(n - 1).contains(image(shifted(x, d - 2 * n), vn));
                else
                    ok = (comp(n - 1) + comp(n) + comp(n + 1)).contains(image(x, vn));
                if (!ok)
                    out.push_back("decomposition [" + std::to_string(i) + "," + std::to_string(j) + "], " +
                                  pair_name(r, s) + " on V_" + std::to_string(n));
            }
        }
    }
    return out;
}

std::vector<std::string> raising_violations(const TetModule& m) {
    std::vector<std::string> out;
    for (const auto& ij : all_pairs()) {
        Decomposition dec = decomposition(m, ij.i, ij.j);
        const long d = dec.diameter;
        for (int k = 0; k < 4; ++k) {
            if (k == ij.i || k == ij.j)
                continue;
            ExactMatrix raise = m.action(ij.i, ij.j) + m.action(ij.j, k);
            for (long n = 0; n <= d; ++n) {
                Subspace target = n + 1 <= d ? dec.components[static_cast<std::size_t>(n + 1)] : Subspace(m.dim());
                if (!target.contains(image(raise, dec.components[static_cast<std::size_t>(n)])))
                    out.push_back(pair_name(ij.i, ij.j) + " + " + pair_name(ij.j, k) + " on V_" + std::to_string(n));
            }
        }
    }
    return out;
}

std::vector<std::string> opposite_flag_violations(const TetModule& m) {
    std::vector<std::string> out;
    std::array<Flag, 4> flags;
    for (int i = 0; i < 4; ++i)
        flags[i] = flag(m, i);
    for (const auto& ij : all_pairs()) {
        Decomposition dec = decomposition(m, ij.i, ij.j);
        const std::size_t d = static_cast<std::size_t>(dec.diameter);
        for (std::size_t n = 0; n <= d; ++n) {
            Subspace meet = intersect(flags[ij.i].components[n], flags[ij.j].components[d - n]);
            if (meet != dec.components[n])
                out.push_back("[" + std::to_string(ij.i) + "," + std::to_string(ij.j) + "] component " +
                              std::to_string(n));
        }
    }
    return out;
}

} // namespace tetbox
