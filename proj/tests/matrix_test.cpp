#include "tetbox/error.hpp"
#include "tetbox/matrix.hpp"

#include <gtest/gtest.h>

using namespace tetbox;

TEST(ExactMatrix, ProductAndTranspose) {
    ExactMatrix a{{1, 2}, {3, 4}};
    ExactMatrix b{{0, 1}, {1, 0}};
    EXPECT_EQ(a * b, (ExactMatrix{{2, 1}, {4, 3}}));
    EXPECT_EQ(a.transpose(), (ExactMatrix{{1, 3}, {2, 4}}));
    EXPECT_EQ(a * ExactMatrix::identity(2), a);
    EXPECT_EQ(a * Vector({Rational(1), Rational(-1)}), (Vector{Rational(-1), Rational(-1)}));
    EXPECT_EQ(commutator(a, b), a * b - b * a);
}

TEST(ExactMatrix, Constructors) {
    EXPECT_EQ(ExactMatrix::reversal(3), (ExactMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    EXPECT_EQ(ExactMatrix::diagonal({Rational(2), Rational(5)}), (ExactMatrix{{2, 0}, {0, 5}}));
    EXPECT_EQ(ExactMatrix::from_columns({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}, 2),
              (ExactMatrix{{1, 3}, {2, 4}}));
    EXPECT_TRUE(ExactMatrix(2, 3).is_zero());
    EXPECT_TRUE(ExactMatrix::diagonal({Rational(1), Rational(0)}).is_diagonal());
}

TEST(ExactMatrix, KernelOfRankOne) {
    auto k = kernel_basis(ExactMatrix{{1, 1}, {2, 2}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0][0], -k[0][1]);
    EXPECT_FALSE(k[0][0].is_zero());
    EXPECT_EQ(rank(ExactMatrix{{1, 1}, {2, 2}}), 1u);
}

TEST(ExactMatrix, RrefPivots) {
    auto e = rref(ExactMatrix{{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(e.reduced, (ExactMatrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST(ExactMatrix, InverseAndDeterminant) {
    ExactMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    EXPECT_EQ(determinant(a), Rational(18));
    ExactMatrix inv = inverse(a);
    EXPECT_EQ(a * inv, ExactMatrix::identity(3));
    EXPECT_FALSE(try_inverse(ExactMatrix{{1, 2}, {2, 4}}).has_value());
    EXPECT_THROW(inverse(ExactMatrix{{1, 2}, {2, 4}}), Error);
    EXPECT_EQ(conjugate(ExactMatrix::diagonal({Rational(1), Rational(2), Rational(3)}), a, inv),
              inv * ExactMatrix::diagonal({Rational(1), Rational(2), Rational(3)}) * a);
}

TEST(ExactMatrix, KroneckerOrdering) {
    ExactMatrix a{{1, 2}, {3, 4}};
    ExactMatrix b{{0, 1}, {1, 0}};
    ExactMatrix k = kronecker(a, b);
    EXPECT_EQ(k, (ExactMatrix{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
}

TEST(ExactMatrix, Stacking) {
    ExactMatrix a{{1}, {2}};
    ExactMatrix b{{3}, {4}};
    EXPECT_EQ(hstack(a, b), (ExactMatrix{{1, 3}, {2, 4}}));
    EXPECT_EQ(vstack(a, b), (ExactMatrix{{1}, {2}, {3}, {4}}));
}

TEST(ExactMatrix, CharacteristicPolynomial) {
    // companion-like matrix with eigenvalues 1, 2, 3
    ExactMatrix a{{6, -11, 6}, {1, 0, 0}, {0, 1, 0}};
    EXPECT_EQ(characteristic_polynomial(a), (UniPoly{-6, 11, -6, 1}));
    auto spec = integer_spectrum(a);
    ASSERT_TRUE(spec.has_value());
    ASSERT_EQ(spec->size(), 3u);
    EXPECT_EQ((*spec)[0].value, 1);
    EXPECT_EQ((*spec)[2].value, 3);
    EXPECT_FALSE(integer_spectrum(ExactMatrix{{0, 2}, {1, 0}}).has_value());
    auto rep = integer_spectrum(ExactMatrix{{-2, 5}, {0, -2}});
    ASSERT_TRUE(rep.has_value());
    EXPECT_EQ(rep->size(), 1u);
    EXPECT_EQ((*rep)[0].multiplicity, 2u);
}

TEST(SparseEchelon, MatchesDenseKernel) {
    ExactMatrix a{{1, 0, 2, -1}, {0, 1, 1, 1}, {1, 1, 3, 0}};
    SparseEchelon s(4);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseEchelon::Row row;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero())
                row.emplace_back(c, a(r, c));
        s.add_equation(row);
    }
    EXPECT_EQ(s.rank(), 2u);
    EXPECT_EQ(s.nullity(), 2u);
    for (const auto& v : s.kernel()) {
        Vector image = a * v;
        for (const auto& x : image)
            EXPECT_TRUE(x.is_zero());
    }
    EXPECT_EQ(rank(ExactMatrix::from_columns(s.kernel(), 4)), 2u);
}
