#include "tetbox/symmetry.hpp"

#include "tetbox/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>

namespace tetbox {

VertexIndex check_vertex(int v) {
    if (v < 0 || v > 3)
        throw Error(ErrorCode::InvalidArgument, "vertex index " + std::to_string(v) + " outside 0..3");
    return v;
}

GenPair::GenPair(int i_, int j_) : i(check_vertex(i_)), j(check_vertex(j_)) {
    if (i == j)
        throw Error(ErrorCode::IndicesNotDistinct, "generator pair needs i != j");
}

std::string GenPair::key() const { return "x" + std::to_string(i) + std::to_string(j); }

std::size_t GenPair::index() const { return static_cast<std::size_t>(i * 3 + (j < i ? j : j - 1)); }

GenPair GenPair::from_key(std::string_view key) {
    if (key.size() != 3 || key[0] != 'x' || !std::isdigit(static_cast<unsigned char>(key[1])) ||
        !std::isdigit(static_cast<unsigned char>(key[2])))
        throw Error(ErrorCode::Parse, "bad generator key '" + std::string(key) + "'");
    return GenPair(key[1] - '0', key[2] - '0');
}

const std::array<GenPair, 12>& all_pairs() {
    static const std::array<GenPair, 12> pairs = [] {
        std::array<GenPair, 12> out;
        std::size_t n = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j)
                    out[n++] = GenPair(i, j);
        return out;
    }();
    return pairs;
}

Perm4::Perm4(std::array<int, 4> images) : images_(images) {
    std::array<bool, 4> seen{};
    for (int v : images_) {
        check_vertex(v);
        if (seen[v])
            throw Error(ErrorCode::InvalidArgument, "image sequence is not a permutation");
        seen[v] = true;
    }
}

Perm4 Perm4::transposition(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw Error(ErrorCode::IndicesNotDistinct, "transposition needs two distinct points");
    std::array<int, 4> im{0, 1, 2, 3};
    std::swap(im[a], im[b]);
    return Perm4(im);
}

Perm4 Perm4::parse(std::string_view text) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.empty() || text == "id" || text == "e" || text == "()")
        return Perm4();

    const std::string original(text);
    Perm4 result;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        if (text[pos] != '(')
            throw Error(ErrorCode::Parse, "expected '(' in permutation '" + original + "'");
        auto close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw Error(ErrorCode::Parse, "unbalanced parenthesis in '" + original + "'");
        std::vector<int> cycle;
        for (std::size_t q = pos + 1; q < close; ++q) {
            char c = text[q];
            if (is_space(c) || c == ',')
                continue;
            if (c < '0' || c > '3')
                throw Error(ErrorCode::Parse, "bad point in permutation '" + original + "'");
            cycle.push_back(c - '0');
        }
        std::array<int, 4> im{0, 1, 2, 3};
        std::array<bool, 4> seen{};
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            if (seen[cycle[t]])
                throw Error(ErrorCode::Parse, "repeated point in cycle of '" + original + "'");
            seen[cycle[t]] = true;
            im[cycle[t]] = cycle[(t + 1) % cycle.size()];
        }
        // Cycles compose right to left, as a product of permutations.
        result = result * Perm4(im);
        pos = close + 1;
    }
    return result;
}

const std::vector<Perm4>& Perm4::all() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> out;
        std::array<int, 4> im{0, 1, 2, 3};
        do {
            out.emplace_back(im);
        } while (std::next_permutation(im.begin(), im.end()));
        return out;
    }();
    return perms;
}

Perm4 operator*(const Perm4& s, const Perm4& t) {
    std::array<int, 4> im{};
    for (int v = 0; v < 4; ++v)
        im[v] = s.images_[t.images_[v]];
    return Perm4(im);
}

Perm4 Perm4::inverse() const {
    std::array<int, 4> im{};
    for (int v = 0; v < 4; ++v)
        im[images_[v]] = v;
    return Perm4(im);
}

bool Perm4::is_even() const {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (images_[a] > images_[b])
                ++inversions;
    return inversions % 2 == 0;
}

std::string Perm4::str() const {
    if (is_identity())
        return "id";
    std::string out;
    std::array<bool, 4> done{};
    for (int start = 0; start < 4; ++start) {
        if (done[start] || images_[start] == start)
            continue;
        out += "(";
        int v = start;
        bool first = true;
        while (!done[v]) {
            done[v] = true;
            out += (first ? "" : " ") + std::to_string(v);
            first = false;
            v = images_[v];
        }
        out += ")";
    }
    return out;
}

EvalParam::EvalParam(Rational a) : a_(std::move(a)) {
    if (a_.is_zero() || a_.is_one())
        throw Error(ErrorCode::InvalidParam, "evaluation parameter must not be 0 or 1, got " + a_.str());
}

namespace {

struct Generator {
    Perm4 perm;
    bool reciprocal; // a -> 1/a, otherwise a -> a/(a-1)
};

const std::array<Generator, 3>& generators() {
    static const std::array<Generator, 3> gens{{
        {Perm4::transposition(2, 0), true},
        {Perm4::transposition(0, 1), false},
        {Perm4::transposition(1, 3), true},
    }};
    return gens;
}

Rational apply_generator(const Perm4& g, const Rational& a) {
    for (const auto& gen : generators())
        if (gen.perm == g) {
            if (gen.reciprocal)
                return a.inverse();
            return a / (a - Rational(1));
        }
    throw Error(ErrorCode::InvalidArgument, "not a generating transposition");
}

} // namespace

const std::vector<Perm4>& generator_word(const Perm4& sigma) {
    // Breadth-first search from the identity, left-multiplying by generators,
    // so each word is of minimal length.
    static const std::map<Perm4, std::vector<Perm4>> words = [] {
        std::map<Perm4, std::vector<Perm4>> w;
        std::queue<Perm4> q;
        w[Perm4()] = {};
        q.push(Perm4());
        while (!q.empty()) {
            Perm4 p = q.front();
            q.pop();
            for (const auto& gen : generators()) {
                Perm4 next = gen.perm * p;
                if (w.count(next))
                    continue;
                std::vector<Perm4> word{gen.perm};
                const auto& tail = w[p];
                word.insert(word.end(), tail.begin(), tail.end());
                w[next] = std::move(word);
                q.push(next);
            }
        }
        return w;
    }();
    return words.at(sigma);
}

EvalParam perm_on_param(const Perm4& sigma, const EvalParam& a) {
    const auto& word = generator_word(sigma);
    Rational value = a.value();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        value = apply_generator(*it, value);
        if (value.is_zero() || value.is_one())
            throw Error(ErrorCode::InvalidParam, "parameter action left the domain");
    }
    return EvalParam(value);
}

const std::array<Perm4, 4>& group_G() {
    static const std::array<Perm4, 4> g{Perm4(), Perm4({1, 0, 3, 2}), Perm4({2, 3, 0, 1}), Perm4({3, 2, 1, 0})};
    return g;
}

bool is_in_G(const Perm4& sigma) {
    const auto& g = group_G();
    return std::find(g.begin(), g.end(), sigma) != g.end();
}

Rational relative(const EvalParam& a, int i, int j, int k, int l) {
    for (int v : {i, j, k, l})
        check_vertex(v);
    if (i == j || i == k || i == l || j == k || j == l || k == l)
        throw Error(ErrorCode::IndicesNotDistinct, "relative needs four distinct indices");
    std::array<int, 4> im{};
    im[i] = 2;
    im[j] = 0;
    im[k] = 1;
    im[l] = 3;
    return perm_on_param(Perm4(im), a).value();
}

std::set<Rational> orbit_of_param(const EvalParam& a) {
    std::set<Rational> out;
    for (const auto& s : Perm4::all())
        out.insert(perm_on_param(s, a).value());
    return out;
}

} // namespace tetbox
