#include "tetbox/error.hpp"
#include "tetbox/evaluation.hpp"
#include "tetbox/intertwiner.hpp"
#include "tetbox/io.hpp"
#include "tetbox/tensor.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace tetbox;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

TetModule eval(int d, Rational a) { return build_eval_module(EvalModuleSpec(d, EvalParam(a))); }

std::vector<EvalModuleSpec> classified(const TetModule& m) {
    auto r = classify(m);
    if (auto* u = std::get_if<Unclassifiable>(&r))
        ADD_FAILURE() << u->reason;
    return std::get<std::vector<EvalModuleSpec>>(r);
}

} // namespace

TEST(TensorSpec, ParseAndPrint) {
    TensorSpec s = TensorSpec::parse("(1,2);(2,3/4)");
    ASSERT_EQ(s.factors.size(), 2u);
    EXPECT_EQ(s.factors[1].a.value(), q(3, 4));
    EXPECT_EQ(TensorSpec::parse(s.str()).str(), s.str());
    EXPECT_TRUE(s.parameters_distinct());
    EXPECT_FALSE(TensorSpec::parse("(1,2);(3,2)").parameters_distinct());
    for (const char* bad : {"", "(1,2", "(1;2)", "(0,2)", "(1,1)", "(1,2);", ";(1,2)", "(1,2)(2,3)", "(1,2);;(2,3)"})
        EXPECT_THROW(TensorSpec::parse(bad), Error) << bad;
}

TEST(Tensor, KroneckerSumWithLeftFactorSlowest) {
    TetModule u = eval(1, q(2)), v = eval(1, q(3));
    TetModule t = tensor(u, v);
    EXPECT_EQ(t.dim(), 4u);
    for (const auto& p : all_pairs())
        EXPECT_EQ(t.action(p), kronecker(u.action(p), ExactMatrix::identity(2)) +
                                   kronecker(ExactMatrix::identity(2), v.action(p)));
    EXPECT_TRUE(verify_relations(t).ok());
}

TEST(Commutant, DistinctParametersIrreducible) {
    EXPECT_EQ(commutant_dimension(build_tensor(TensorSpec::parse("(1,2);(2,3)"))), 1u);
    EXPECT_EQ(commutant_dimension(build_tensor(TensorSpec::parse("(1,2);(1,2)"))), 2u);
    EXPECT_EQ(commutant_dimension(build_tensor(TensorSpec::parse("(1,2);(2,2)"))), 2u);
}

TEST(Intertwiner, BasisDimension) {
    TetModule v = eval(2, q(3));
    EXPECT_EQ(intertwiner_basis(v, v).size(), 1u);
    EXPECT_TRUE(intertwiner_basis(v, eval(2, q(5))).empty());
    EXPECT_FALSE(solve_intertwiner(eval(1, q(3)), v).has_value());
}

TEST(Theta, FrozenSequence) {
    ThetaSequence t = theta_sequence(eval(2, q(3)));
    EXPECT_EQ(t.theta, (Vector{q(1), q(6), q(36)}));
}

TEST(Drinfeld, EvaluationModule) {
    for (const Rational& a : {q(2), q(3), q(1, 2), q(-4, 7)})
        for (int d = 1; d <= 4; ++d)
            EXPECT_EQ(drinfeld_polynomial(eval(d, a)), (UniPoly{q(1), -a}).pow(d));
}

TEST(Drinfeld, Multiplicative) {
    TetModule u = eval(2, q(3)), v = eval(1, q(-2, 5));
    EXPECT_EQ(drinfeld_polynomial(tensor(u, v)), drinfeld_polynomial(u) * drinfeld_polynomial(v));
}

TEST(Drinfeld, FromThetaInverts) {
    TetModule m = eval(3, q(5, 2));
    EXPECT_EQ(drinfeld_from_theta(theta_sequence(m)), drinfeld_polynomial(m));
}

TEST(Classify, RoundTripSorted) {
    auto f = classified(build_tensor(TensorSpec::parse("(1,2);(2,3)")));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], EvalModuleSpec(2, EvalParam(q(3))));
    EXPECT_EQ(f[1], EvalModuleSpec(1, EvalParam(q(2))));

    auto g = classified(build_tensor(TensorSpec::parse("(1,3);(1,-1/2);(1,1/2)")));
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[0].a.value(), q(-1, 2));
    EXPECT_EQ(g[1].a.value(), q(1, 2));
    EXPECT_EQ(g[2].a.value(), q(3));
}

TEST(Classify, TrivialModuleIsEmpty) {
    EXPECT_TRUE(classified(TetModule::trivial(1)).empty());
}

TEST(Classify, TwistMovesParameter) {
    TetModule v = eval(2, q(3));
    auto f = classified(twist(v, Perm4::parse("(0 1)")));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], EvalModuleSpec(2, EvalParam(q(3, 2))));
}

TEST(Forms, NormalizeFirstEntry) {
    EXPECT_EQ(normalize_form(ExactMatrix{{0, 4}, {-2, 6}}), (ExactMatrix{{0, 1}, {q(-1, 2), q(3, 2)}}));
}

TEST(Forms, StandardFormMatchesClosedForm) {
    for (int d = 1; d <= 3; ++d) {
        EvalModuleSpec s(d, EvalParam(q(7, 3)));
        EXPECT_EQ(build_standard_form(build_eval_module(s)), normalize_form(standard_form_gram(s)));
    }
}

TEST(Forms, SigmaFormSymmetricAndTwistedInvariant) {
    TetModule m = eval(3, q(-3));
    for (const auto& sigma : group_G()) {
        if (sigma.is_identity())
            continue;
        ExactMatrix g = build_sigma_form(m, sigma);
        EXPECT_EQ(g, g.transpose());
        EXPECT_NE(determinant(g), q(0));
        for (const auto& p : all_pairs())
            EXPECT_EQ(m.action(p).transpose() * g, -(g * m.action(sigma(p))));
    }
    EXPECT_THROW(build_sigma_form(m, Perm4::identity()), Error);
    EXPECT_THROW(build_sigma_form(m, Perm4::parse("(0 1)")), Error);
}

TEST(Forms, ReducibleHasNoUniqueForm) {
    EXPECT_THROW(build_standard_form(build_tensor(TensorSpec::parse("(1,2);(1,2)"))), Error);
}

TEST(Classify, GaussianPairIsUnclassifiable) {
    std::ifstream in(std::string(TETBOX_TEST_DATA) + "/gaussian_pair.json");
    ASSERT_TRUE(in);
    TetModule m = module_from_json(nlohmann::json::parse(in));
    EXPECT_TRUE(verify_relations(m).ok());
    EXPECT_EQ(commutant_dimension(m), 1u);
    EXPECT_EQ(drinfeld_polynomial(m), (UniPoly{1, 0, 1}));
    EXPECT_TRUE(std::holds_alternative<Unclassifiable>(classify(m)));
}
