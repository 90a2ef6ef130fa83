#pragma once

#include "tetbox/rational.hpp"

#include <array>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tetbox {

/// A vertex of the tetrahedron, 0..3.
using VertexIndex = int;

/// Throws InvalidArgument when v is outside 0..3.
VertexIndex check_vertex(int v);

/// Ordered pair (i,j), i != j, naming the generator x_ij.
struct GenPair {
    VertexIndex i = 0;
    VertexIndex j = 1;

    GenPair() = default;
    GenPair(int i_, int j_);

    GenPair reversed() const { return GenPair(j, i); }
    /// "x01" style key.
    std::string key() const;
    /// Position among the 12 pairs in all_pairs().
    std::size_t index() const;
    static GenPair from_key(std::string_view key);

    friend auto operator<=>(const GenPair&, const GenPair&) = default;
};

/// The 12 ordered pairs in lexicographic order.
const std::array<GenPair, 12>& all_pairs();

/// Permutation of {0,1,2,3} stored as the image sequence.
class Perm4 {
  public:
    Perm4() : images_{0, 1, 2, 3} {}
    explicit Perm4(std::array<int, 4> images);

    static Perm4 identity() { return Perm4(); }
    static Perm4 transposition(int a, int b);
    /// Accepts disjoint-cycle notation "(0 1)(2 3)", comma separators "(0,1)",
    /// or "id".
    static Perm4 parse(std::string_view text);
    /// All 24 permutations in lexicographic order of images.
    static const std::vector<Perm4>& all();

    int operator()(int v) const { return images_[check_vertex(v)]; }
    GenPair operator()(const GenPair& p) const { return GenPair(images_[p.i], images_[p.j]); }
    const std::array<int, 4>& images() const { return images_; }

    /// (s * t)(v) = s(t(v)).
    friend Perm4 operator*(const Perm4& s, const Perm4& t);
    Perm4 inverse() const;
    bool is_identity() const { return *this == Perm4(); }
    bool is_even() const;

    /// Canonical disjoint-cycle form, smallest moved point first; "id" for the
    /// identity.
    std::string str() const;

    friend auto operator<=>(const Perm4&, const Perm4&) = default;

  private:
    std::array<int, 4> images_;
};

/// Evaluation parameter: any rational except 0 and 1.
class EvalParam {
  public:
    /// Throws InvalidParam for 0 or 1.
    EvalParam(Rational a);
    const Rational& value() const { return a_; }
    operator const Rational&() const { return a_; }
    friend bool operator==(const EvalParam&, const EvalParam&) = default;

  private:
    Rational a_;
};

/// Image of a under sigma, composed from the fractional-linear maps of the
/// generating transpositions (2,0): a -> 1/a, (0,1): a -> a/(a-1),
/// (1,3): a -> 1/a.
EvalParam perm_on_param(const Perm4& sigma, const EvalParam& a);

/// Word in the generators (2,0), (0,1), (1,3) whose product is sigma; the
/// leftmost letter acts last.
const std::vector<Perm4>& generator_word(const Perm4& sigma);

/// The Klein four-group {id, (01)(23), (02)(13), (03)(12)}.
const std::array<Perm4, 4>& group_G();
bool is_in_G(const Perm4& sigma);

/// sigma(a) for the sigma with i -> 2, j -> 0, k -> 1, l -> 3.
Rational relative(const EvalParam& a, int i, int j, int k, int l);

/// {a, 1/a, 1-a, 1/(1-a), a/(a-1), 1-1/a}.
std::set<Rational> orbit_of_param(const EvalParam& a);

} // namespace tetbox
