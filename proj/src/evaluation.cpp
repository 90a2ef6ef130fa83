#include "tetbox/evaluation.hpp"

#include "tetbox/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace tetbox {

Sl2Element sl2_bracket(const Sl2Element& a, const Sl2Element& b) {
    Rational xy = a.cx * b.cy - a.cy * b.cx;
    Rational yz = a.cy * b.cz - a.cz * b.cy;
    Rational zx = a.cz * b.cx - a.cx * b.cz;
    return {2 * (xy + zx), 2 * (xy + yz), 2 * (yz + zx)};
}

ExactMatrix sl2_matrix(const Sl2Element& e, int d) {
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    ExactMatrix m(n, n);
    for (int c = 0; c <= d; ++c) {
        const std::size_t cc = static_cast<std::size_t>(c);
        Rational weight(2 * c - d);
        m(cc, cc) = (e.cx + e.cy - e.cz) * weight;
        if (c > 0 && !e.cx.is_zero())
            m(cc - 1, cc) = e.cx * Rational(2 * (d - c + 1));
        if (c < d && !e.cy.is_zero())
            m(cc + 1, cc) = e.cy * Rational(-2 * (c + 1));
    }
    return m;
}

Sl2Element ev_map(const EvalParam& ap, const GenPair& pair) {
    const Rational& a = ap.value();
    const Rational one(1);
    if (pair.i > pair.j)
        return -ev_map(ap, pair.reversed());
    const int key = pair.i * 4 + pair.j;
    switch (key) {
    case 1 * 4 + 2: return {1, 0, 0};
    case 2 * 4 + 3: return {0, 1, 0};
    case 1 * 4 + 3: return {0, 0, -1}; // x13 = -x31
    case 0 * 4 + 3: return {0, a, a - one};
    case 0 * 4 + 1: return {-a.inverse(), 0, one - a.inverse()};
    case 0 * 4 + 2: return {(one - a).inverse(), a / (one - a), 0};
    }
    throw Error(ErrorCode::InvalidArgument, "unreachable generator pair");
}

EvalModuleSpec::EvalModuleSpec(int d_, EvalParam a_) : d(d_), a(std::move(a_)) {
    if (d < 1)
        throw Error(ErrorCode::InvalidArgument, "diameter must be at least 1, got " + std::to_string(d));
}

std::string EvalModuleSpec::str() const { return "V_" + std::to_string(d) + "(" + a.value().str() + ")"; }

TetModule build_eval_module(const EvalModuleSpec& spec) {
    TetModule::Actions arr;
    for (const auto& p : all_pairs())
        arr[p.index()] = sl2_matrix(ev_map(spec.a, p), spec.d);
    return TetModule(static_cast<std::size_t>(spec.d) + 1, std::move(arr), spec.str());
}

std::variant<EvalParam, NotEvaluation> extract_eval_param(const TetModule& m) {
    bool all_zero = std::all_of(m.actions().begin(), m.actions().end(),
                                [](const ExactMatrix& x) { return x.is_zero(); });
    if (all_zero)
        return NotEvaluation{"trivial action"};

    const ExactMatrix lhs = m.action(0, 1) - m.action(0, 2);
    const ExactMatrix rhs = m.action(0, 3) - m.action(0, 2);
    if (lhs.is_zero())
        throw Error(ErrorCode::Inconsistent, "x01 and x02 coincide on a nontrivial module");
    std::size_t at = 0;
    while (lhs.entries()[at].is_zero())
        ++at;
    Rational a = rhs.entries()[at] / lhs.entries()[at];
    if (lhs * a != rhs)
        return NotEvaluation{"x01, x02, x03 are linearly independent"};
    if (a.is_zero() || a.is_one())
        throw Error(ErrorCode::Inconsistent, "dependency coefficient is " + a.str());

    const Rational b = Rational(1) - a;
    auto vanishes = [&](int p, int q, int r, int s, int t, int u) {
        ExactMatrix e = m.action(p, q) * a;
        e.add_scaled(b, m.action(r, s));
        e -= m.action(t, u);
        return e.is_zero();
    };
    if (!vanishes(1, 0, 1, 3, 1, 2) || !vanishes(2, 3, 2, 0, 2, 1) || !vanishes(3, 2, 3, 1, 3, 0))
        throw Error(ErrorCode::Inconsistent, "parameter " + a.str() + " fails the remaining vanishing expressions");
    UniPoly shape = shape_polynomial(m);
    if (shape != UniPoly::geometric(static_cast<std::size_t>(shape.degree())))
        throw Error(ErrorCode::Inconsistent, "shape is not (1,...,1)");
    return EvalParam(a);
}

BracketBasisId::BracketBasisId(int i_, int j_, int k_, int l_) : i(i_), j(j_), k(k_), l(l_) {
    for (int v : {i, j, k, l})
        check_vertex(v);
    if (i == j || i == k || i == l || j == k || j == l || k == l)
        throw Error(ErrorCode::IndicesNotDistinct, "basis indices must be mutually distinct");
}

BracketBasisId BracketBasisId::parse(const std::string& text) {
    std::vector<int> v;
    for (char c : text) {
        if (c >= '0' && c <= '9')
            v.push_back(c - '0');
        else if (c != ',' && c != ' ' && c != '(' && c != ')' && c != '[' && c != ']')
            throw Error(ErrorCode::Parse, "bad basis id '" + text + "'");
    }
    if (v.size() != 4)
        throw Error(ErrorCode::Parse, "basis id needs four indices: '" + text + "'");
    return BracketBasisId(v[0], v[1], v[2], v[3]);
}

const std::vector<BracketBasisId>& BracketBasisId::all() {
    static const std::vector<BracketBasisId> ids = [] {
        std::vector<BracketBasisId> out;
        for (const auto& p : Perm4::all()) {
            const auto& im = p.images();
            out.emplace_back(im[0], im[1], im[2], im[3]);
        }
        return out;
    }();
    return ids;
}

std::string BracketBasisId::str() const {
    return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l);
}

std::map<GenPair, ExactMatrix> bracket_basis_matrices(const EvalModuleSpec& spec, const BracketBasisId& b) {
    const int d = spec.d;
    const std::size_t n1 = static_cast<std::size_t>(d) + 1;
    const Rational alpha = relative(spec.a, b.i, b.j, b.k, b.l);
    const Rational one(1);

    // Entries per column n: below = (n, n-1), diag = (n, n), above = (n-1, n).
    auto tri = [&](auto below, auto diag, auto above) {
        ExactMatrix m(n1, n1);
        for (int n = 0; n <= d; ++n) {
            const std::size_t nn = static_cast<std::size_t>(n);
            m(nn, nn) = diag(n);
            if (n > 0) {
                m(nn, nn - 1) = below(n);
                m(nn - 1, nn) = above(n);
            }
        }
        return m;
    };
    auto zero = [](int) { return Rational(0); };
    auto down = [d](int n) { return Rational(d - 2 * n); };
    auto up = [d](int n) { return Rational(2 * n - d); };

    std::map<GenPair, ExactMatrix> out;
    auto put = [&](int r, int s, ExactMatrix m) {
        out[GenPair(s, r)] = -m;
        out[GenPair(r, s)] = std::move(m);
    };
    put(b.l, b.k, tri(zero, down, zero));
    put(b.k, b.i, tri(zero, up, [d](int n) { return Rational(2 * d - 2 * n + 2); }));
    put(b.i, b.l, tri([](int n) { return Rational(-2 * n); }, up, zero));
    put(b.l, b.j, tri([&](int n) { return 2 * alpha * Rational(n); }, down, zero));
    put(b.j, b.k, tri(zero, down, [&](int n) { return Rational(2 * (n - d - 1)) / alpha; }));
    put(b.j, b.i,
        tri([&](int n) { return 2 * alpha * Rational(n) / (alpha - one); },
            [&](int n) { return Rational(d - 2 * n) * (alpha + one) / (alpha - one); },
            [&](int n) { return Rational(2 * (d - n + 1)) / (one - alpha); }));
    return out;
}

TetModule bracket_basis_module(const EvalModuleSpec& spec, const BracketBasisId& b) {
    return TetModule::from_map(static_cast<std::size_t>(spec.d) + 1, bracket_basis_matrices(spec, b),
                               spec.str() + " [" + b.str() + "]");
}

std::array<std::array<Rational, 4>, 4> EtaPairings::table(const EvalModuleSpec& spec) const {
    for (const Rational* p : {&p01, &p02, &p03, &p12})
        if (p->is_zero())
            throw Error(ErrorCode::PairingsInconsistent, "free pairings must be nonzero");
    const long d = spec.d;
    const Rational& a = spec.a.value();
    const Rational sign = d % 2 == 0 ? Rational(1) : Rational(-1);
    std::array<std::array<Rational, 4>, 4> t{};
    auto set = [&](int i, int j, const Rational& v) {
        t[i][j] = v;
        t[j][i] = sign * v;
    };
    set(0, 1, p01);
    set(0, 2, p02);
    set(0, 3, p03);
    set(1, 2, p12);
    set(2, 3, a.pow(d) * p03 * t[2][1] / p01);
    set(1, 3, (Rational(1) - a).pow(d) * p03 * p12 / p02);
    return t;
}

namespace {

enum class Swap { First, Middle, Last };

ExactMatrix adjacent_transition(const EvalModuleSpec& spec, const BracketBasisId& from, Swap kind,
                                const std::array<std::array<Rational, 4>, 4>& eta) {
    const int d = spec.d;
    const std::size_t n1 = static_cast<std::size_t>(d) + 1;
    const Rational alpha = relative(spec.a, from.i, from.j, from.k, from.l);
    ExactMatrix t(n1, n1);
    switch (kind) {
    case Swap::First: {
        Rational ratio = eta[from.j][from.l] / eta[from.i][from.l];
        Rational power = 1;
        for (std::size_t r = 0; r < n1; ++r) {
            t(r, r) = ratio * power;
            power *= alpha;
        }
        break;
    }
    case Swap::Middle: {
        const Rational beta = Rational(1) - alpha;
        for (int r = 0; r <= d; ++r)
            for (int s = 0; s <= r; ++s)
                t(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) =
                    binomial(r, s) * alpha.pow(r - s) * beta.pow(s);
        break;
    }
    case Swap::Last:
        t = ExactMatrix::reversal(n1);
        break;
    }
    return t;
}

} // namespace

ExactMatrix transition_matrix(const EvalModuleSpec& spec, const BracketBasisId& from, const BracketBasisId& to,
                              const EtaPairings& pairings) {
    const auto eta = pairings.table(spec);
    // Shortest chain of adjacent swaps from `from` to `to`.
    std::map<BracketBasisId, std::pair<BracketBasisId, Swap>> came_from;
    std::queue<BracketBasisId> q;
    q.push(from);
    came_from.emplace(from, std::make_pair(from, Swap::First));
    while (!q.empty() && !came_from.count(to)) {
        BracketBasisId cur = q.front();
        q.pop();
        for (Swap s : {Swap::First, Swap::Middle, Swap::Last}) {
            BracketBasisId next = s == Swap::First ? cur.swap_first() : s == Swap::Middle ? cur.swap_middle()
                                                                                            : cur.swap_last();
            if (came_from.count(next))
                continue;
            came_from.emplace(next, std::make_pair(cur, s));
            q.push(next);
        }
    }
    std::vector<std::pair<BracketBasisId, Swap>> steps;
    for (BracketBasisId cur = to; !(cur == from);) {
        const auto& [prev, s] = came_from.at(cur);
        steps.emplace_back(prev, s);
        cur = prev;
    }
    ExactMatrix t = ExactMatrix::identity(static_cast<std::size_t>(spec.d) + 1);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        t = t * adjacent_transition(spec, it->first, it->second, eta);
    return t;
}

ExactMatrix standard_form_gram(const EvalModuleSpec& spec) {
    const int d = spec.d;
    const std::size_t n1 = static_cast<std::size_t>(d) + 1;
    ExactMatrix g(n1, n1);
    for (int r = 0; r <= d; ++r) {
        Rational v = binomial(d, r);
        g(static_cast<std::size_t>(r), static_cast<std::size_t>(d - r)) = r % 2 == 0 ? v : -v;
    }
    return g;
}

} // namespace tetbox
