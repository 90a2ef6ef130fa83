#include "tetbox/error.hpp"
#include "tetbox/evaluation.hpp"
#include "tetbox/io.hpp"
#include "tetbox/tensor.hpp"

#include <gtest/gtest.h>

using namespace tetbox;
using nlohmann::json;

namespace {

TetModule eval(int d, Rational a) { return build_eval_module(EvalModuleSpec(d, EvalParam(a))); }

} // namespace

TEST(Json, MatrixRoundTrip) {
    ExactMatrix m{{Rational(1, 3), Rational(-4)}, {Rational(0), Rational(22, 7)}};
    json j = matrix_to_json(m);
    EXPECT_EQ(j[0][0], "1/3");
    EXPECT_EQ(matrix_from_json(j), m);
    EXPECT_EQ(matrix_from_json(json::parse("[[1, \"-1/2\"], [0, 3]]")),
              (ExactMatrix{{Rational(1), Rational(-1, 2)}, {Rational(0), Rational(3)}}));
}

TEST(Json, MatrixRejectsRaggedOrNonNumeric) {
    EXPECT_THROW(matrix_from_json(json::parse("[[1, 2], [3]]")), Error);
    EXPECT_THROW(matrix_from_json(json::parse("[[1.5]]")), Error);
    EXPECT_THROW(matrix_from_json(json::parse("[[\"x\"]]")), Error);
    EXPECT_THROW(matrix_from_json(json::parse("{}")), Error);
}

TEST(Json, ModuleRoundTripIsBitExact) {
    for (const TetModule& m : {eval(3, Rational(-7, 9)), build_tensor(TensorSpec::parse("(1,2);(2,1/3)"))}) {
        json j = module_to_json(m);
        EXPECT_EQ(j["schema"], kSchema);
        EXPECT_EQ(j["dim"], m.dim());
        TetModule back = module_from_json(json::parse(j.dump()));
        EXPECT_EQ(back, m);
        EXPECT_TRUE(verify_relations(back).ok());
    }
}

TEST(Json, BasisFieldIsOptional) {
    TetModule m = eval(1, Rational(2));
    EXPECT_FALSE(module_to_json(m).contains("basis"));
    EXPECT_EQ(module_to_json(m, "0,1,2,3")["basis"], "0,1,2,3");
}

TEST(Json, ModuleErrors) {
    json j = module_to_json(eval(1, Rational(2)));
    json missing = j;
    missing["action"].erase("x23");
    try {
        module_from_json(missing);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
    json wrong_dim = j;
    wrong_dim["dim"] = 3;
    EXPECT_THROW(module_from_json(wrong_dim), Error);
    try {
        module_from_json(json::array());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
}

TEST(Csv, OneLinePerEntry) {
    std::string csv = module_to_csv(eval(1, Rational(2)));
    EXPECT_EQ(csv.rfind("generator,row,col,value\n", 0), 0u);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 1u + 12u * 4u);
    EXPECT_NE(csv.find("x02,0,0,3\n"), std::string::npos);
    EXPECT_NE(csv.find("x02,1,1,-3\n"), std::string::npos);
}

TEST(Table, NamesEveryGenerator) {
    std::string t = module_to_table(eval(1, Rational(2)));
    for (const auto& p : all_pairs())
        EXPECT_NE(t.find(p.key()), std::string::npos);
}

TEST(Json, Classification) {
    json j = classification_to_json({EvalModuleSpec(2, EvalParam(Rational(3))), EvalModuleSpec(1, EvalParam(Rational(2)))});
    EXPECT_EQ(j, json::parse(R"([{"d":2,"a":"3"},{"d":1,"a":"2"}])"));
    EXPECT_EQ(poly_to_json(UniPoly{1, -6, 9}), json::parse(R"(["1","-6","9"])"));
}
