#include "tetbox/matrix.hpp"
#include "tetbox/subspace.hpp"

#include <gtest/gtest.h>

using namespace tetbox;

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

} // namespace

TEST(Subspace, CanonicalBasisMakesEqualityWork) {
    Subspace a = Subspace::span({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
    Subspace b = Subspace::span({vec({1, 2, 1}), vec({1, 0, -1}), vec({2, 2, 0})}, 3);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.dim(), 2u);
}

TEST(Subspace, SumAndIntersection) {
    Subspace xy = Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3);
    Subspace yz = Subspace::span({vec({0, 1, 0}), vec({0, 0, 1})}, 3);
    EXPECT_EQ((xy + yz), Subspace::whole(3));
    Subspace y = intersect(xy, yz);
    EXPECT_EQ(y, Subspace::span({vec({0, 5, 0})}, 3));
    EXPECT_TRUE(xy.contains(y));
    EXPECT_FALSE(y.contains(xy));
    EXPECT_EQ(intersect(Subspace::span({vec({1, 0, 0})}, 3), Subspace::span({vec({0, 0, 1})}, 3)).dim(), 0u);
}

TEST(Subspace, ContainsVector) {
    Subspace s = Subspace::span({vec({1, 2, 3})}, 3);
    EXPECT_TRUE(s.contains(vec({-2, -4, -6})));
    EXPECT_FALSE(s.contains(vec({1, 2, 4})));
    EXPECT_TRUE(Subspace(3).contains(vec({0, 0, 0})));
}

TEST(Subspace, ImageAndNullSpace) {
    ExactMatrix m{{1, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    EXPECT_EQ(null_space(m), Subspace::span({vec({1, -1, 0})}, 3));
    EXPECT_EQ(image(m, Subspace::whole(3)), Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3));
    EXPECT_EQ(Subspace::column_span(m).dim(), 2u);
}
