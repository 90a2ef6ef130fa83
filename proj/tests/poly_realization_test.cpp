#include "tetbox/error.hpp"
#include "tetbox/evaluation.hpp"
#include "tetbox/poly_realization.hpp"

#include <gtest/gtest.h>

using namespace tetbox;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

BetaQuad quad(Rational b0, Rational b1, Rational b2, Rational b3) { return BetaQuad({b0, b1, b2, b3}); }

// Coordinates of a HomPoly evaluated at (z0, z1) = (s, t).
Rational eval_at(const HomPoly& h, const Rational& s, const Rational& t) {
    Rational out;
    for (int n = 0; n <= h.d; ++n)
        out += h.coeffs[n] * s.pow(h.d - n) * t.pow(n);
    return out;
}

} // namespace

TEST(BetaQuad, ParseAndDistinctness) {
    BetaQuad b = BetaQuad::parse("4/3,0,1,2");
    EXPECT_EQ(b[0], q(4, 3));
    EXPECT_EQ(b.diff(3, 0), q(2, 3));
    EXPECT_EQ(BetaQuad::parse(b.str()), b);
    EXPECT_THROW(BetaQuad::parse("1,2,1,3"), Error);
    EXPECT_THROW(BetaQuad::parse("1,2,3"), Error);
}

TEST(BetaQuad, FrozenChoiceForParameter) {
    EXPECT_EQ(betas_for_param(EvalParam(q(2))), quad(q(4, 3), 0, 1, 2));
    for (const Rational& a : {q(2), q(3), q(-1), q(1, 2), q(7, 5)})
        EXPECT_EQ(cross_ratio(betas_for_param(EvalParam(a))), a);
}

TEST(LinearForms, SatisfyBothConstraints) {
    BetaQuad b = quad(q(5), q(-1), q(2, 3), q(4));
    // sum z_i = 0 and sum beta_i z_i = 0 hold at every point (z0, z1).
    for (const auto& [s, t] : {std::pair{q(1), q(0)}, std::pair{q(0), q(1)}, std::pair{q(3), q(-7, 2)}}) {
        Rational sum, weighted;
        for (int i = 0; i < 4; ++i) {
            LinearForm f = linear_form(b, i);
            Rational zi = f.p * s + f.q * t;
            sum += zi;
            weighted += b[i] * zi;
        }
        EXPECT_TRUE(sum.is_zero());
        EXPECT_TRUE(weighted.is_zero());
    }
}

TEST(HomPoly, Arithmetic) {
    HomPoly x = HomPoly::from_linear({1, 2});
    HomPoly sq = x.pow(2);
    EXPECT_EQ(sq.d, 2);
    EXPECT_EQ(sq.coeffs, (Vector{q(1), q(4), q(4)}));
    EXPECT_EQ(eval_at(x * x + q(3) * sq, q(2), q(-1)), q(0));
    EXPECT_EQ(HomPoly::one().d, 0);
}

TEST(Derivation, SignsOnLinearForms) {
    BetaQuad b = quad(q(3), 0, 1, q(-2));
    ExactMatrix d = derivation_on_linear(b, 1, 3);
    LinearForm z1 = linear_form(b, 1), z3 = linear_form(b, 3);
    EXPECT_EQ(d * Vector({z1.p, z1.q}), (Vector{-z1.p, -z1.q}));
    EXPECT_EQ(d * Vector({z3.p, z3.q}), (Vector{z3.p, z3.q}));
}

TEST(PolyModule, RelationsAndParameter) {
    for (const BetaQuad& b : {quad(q(4, 3), 0, 1, 2), quad(q(-1), q(5), q(1, 2), q(3)), quad(0, 1, q(7), q(-3, 2))})
        for (int d = 1; d <= 4; ++d) {
            TetModule m = build_poly_module(d, b);
            EXPECT_TRUE(verify_relations(m).ok());
            auto a = extract_eval_param(m);
            ASSERT_TRUE(std::holds_alternative<EvalParam>(a));
            EXPECT_EQ(std::get<EvalParam>(a).value(), cross_ratio(b));
        }
}

TEST(PolyModule, BracketBasisMatchesTable) {
    BetaQuad b = quad(q(2), q(-1), q(1, 3), q(5));
    EvalModuleSpec s(3, EvalParam(cross_ratio(b)));
    for (const auto& id : BracketBasisId::all())
        EXPECT_EQ(poly_module_in_bracket_basis(3, b, id), bracket_basis_module(s, id)) << id.str();
}

TEST(PolyPairing, InvariantAndIndependentOfVertices) {
    BetaQuad b = quad(q(3), q(-2), q(1, 2), q(6));
    for (int d = 1; d <= 3; ++d) {
        TetModule m = build_poly_module(d, b);
        ExactMatrix g = poly_gram(d, b, 0, 1).gram();
        for (const auto& p : all_pairs()) {
            EXPECT_EQ(poly_gram(d, b, p.i, p.j).gram(), g);
            EXPECT_EQ(m.action(p).transpose() * g, -(g * m.action(p)));
        }
        EXPECT_EQ(g.transpose(), d % 2 == 0 ? g : -g);
    }
    EXPECT_THROW(poly_gram(2, b, 1, 1), Error);
}

TEST(PolyPairing, EtaValuesFromMonomials) {
    BetaQuad b = quad(q(3), q(-2), q(1, 2), q(6));
    int d = 2;
    PolyPairing pair = poly_gram(d, b, 0, 1);
    EtaPairings eta = poly_eta_pairings(d, b);
    auto eta_poly = [&](int i) { return HomPoly::from_linear(linear_form(b, i)).pow(d); };
    EXPECT_EQ(pair(eta_poly(0), eta_poly(1)), eta.p01);
    EXPECT_EQ(pair(eta_poly(0), eta_poly(3)), eta.p03);
    EXPECT_EQ(pair(eta_poly(1), eta_poly(2)), eta.p12);
    auto table = eta.table(EvalModuleSpec(d, EvalParam(cross_ratio(b))));
    EXPECT_EQ(pair(eta_poly(2), eta_poly(3)), table[2][3]);
    EXPECT_EQ(pair(eta_poly(1), eta_poly(3)), table[1][3]);
}

TEST(Automorphism, ConjugatesIntoTwist) {
    BetaQuad b = quad(q(5, 2), 0, 1, q(-3));
    for (int d = 1; d <= 3; ++d) {
        TetModule m = build_poly_module(d, b);
        for (const auto& sigma : group_G()) {
            if (sigma.is_identity())
                continue;
            ExactMatrix phi = automorphism_for_sigma(d, b, sigma);
            for (const auto& p : all_pairs())
                EXPECT_EQ(phi * m.action(p), m.action(sigma(p)) * phi) << sigma.str() << " " << p.key();
        }
    }
}

TEST(Automorphism, RejectsOutsideG) {
    BetaQuad b = quad(q(5, 2), 0, 1, q(-3));
    EXPECT_THROW(automorphism_for_sigma(2, b, Perm4::identity()), Error);
    EXPECT_THROW(automorphism_for_sigma(2, b, Perm4::parse("(0 1)")), Error);
}
