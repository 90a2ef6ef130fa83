// tetbox: construct, verify and classify modules of the tetrahedron algebra.
//
// Exit status: 0 success, 1 suite failure, 2 usage error, 3 domain error,
// 4 unclassifiable Drinfel'd polynomial.

#include "tetbox/error.hpp"
#include "tetbox/evaluation.hpp"
#include "tetbox/intertwiner.hpp"
#include "tetbox/io.hpp"
#include "tetbox/poly_realization.hpp"
#include "tetbox/suites.hpp"
#include "tetbox/tensor.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace tetbox;
using nlohmann::json;

enum Exit { kOk = 0, kSuiteFailed = 1, kUsage = 2, kDomain = 3, kUnclassifiable = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int d = 0;
    std::string a;
    std::string basis;
    std::string emit = "json";
    std::string suite;
    int max_d = 4;
    std::string spec;
    std::string sigma;
    std::string betas;
    std::string module_path;
};

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

EvalParam eval_param_flag(const Options& o) {
    if (o.a.empty())
        throw UsageError("--a is required");
    return EvalParam(parse_rational_flag(o.a, "a"));
}

EvalModuleSpec eval_spec_flags(const Options& o) {
    if (o.d < 1)
        throw UsageError("--d must be a positive integer");
    return EvalModuleSpec(o.d, eval_param_flag(o));
}

TetModule read_module(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open module file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
    return module_from_json(j);
}

void emit_module(const TetModule& m, const std::string& emit, const std::optional<std::string>& basis,
                 json extra = json::object()) {
    if (emit == "csv") {
        std::cout << module_to_csv(m);
        for (const auto& [key, value] : extra.items())
            std::cerr << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    } else if (emit == "table") {
        for (const auto& [key, value] : extra.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        if (basis)
            std::cout << "basis [" << *basis << "]\n";
        std::cout << module_to_table(m);
    } else {
        json j = module_to_json(m, basis);
        for (const auto& [key, value] : extra.items())
            j[key] = value;
        std::cout << j.dump(2) << '\n';
    }
}

int cmd_eval(const Options& o) {
    EvalModuleSpec spec = eval_spec_flags(o);
    if (o.basis.empty()) {
        emit_module(build_eval_module(spec), o.emit, std::nullopt);
    } else {
        BracketBasisId b = BracketBasisId::parse(o.basis);
        emit_module(bracket_basis_module(spec, b), o.emit, b.str(),
                    {{"relative", relative(spec.a, b.i, b.j, b.k, b.l).str()}});
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    auto reports = run_suites(o.suite, o.max_d);
    json out = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        out.push_back(r.to_json());
        ok = ok && r.ok();
    }
    if (o.emit == "table") {
        for (const auto& r : reports) {
            std::cout << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
            for (const auto& f : r.failures)
                std::cout << "  FAIL " << f << '\n';
        }
    } else {
        std::cout << json{{"schema", kSchema}, {"max_d", o.max_d}, {"suites", out}}.dump(2) << '\n';
    }
    return ok ? kOk : kSuiteFailed;
}

int cmd_tensor(const Options& o) {
    if (o.spec.empty())
        throw UsageError("--spec is required");
    TensorSpec spec = TensorSpec::parse(o.spec);
    emit_module(build_tensor(spec), o.emit, std::nullopt);
    return kOk;
}

int cmd_classify(const Options& o) {
    if (o.spec.empty() == o.module_path.empty())
        throw UsageError("give exactly one of --spec or --module");
    TetModule m = o.module_path.empty() ? build_tensor(TensorSpec::parse(o.spec)) : read_module(o.module_path);
    auto report = verify_relations(m);
    if (!report.ok())
        throw Error(ErrorCode::Inconsistent, "input is not a module: " + report.violations.front().describe());
    std::size_t commutant = commutant_dimension(m);
    if (commutant != 1)
        throw Error(ErrorCode::NotIrreducible, "commutant has dimension " + std::to_string(commutant));
    auto result = classify(m);
    if (auto* u = std::get_if<Unclassifiable>(&result)) {
        std::cerr << "unclassifiable: " << u->reason << '\n';
        if (o.emit != "table")
            std::cout << json{{"unclassifiable", u->reason}, {"drinfeld", poly_to_json(drinfeld_polynomial(m))}}.dump(2)
                      << '\n';
        return kUnclassifiable;
    }
    const auto& factors = std::get<std::vector<EvalModuleSpec>>(result);
    if (o.emit == "table") {
        std::cout << "Drinfel'd polynomial: " << drinfeld_polynomial(m).str() << '\n';
        for (const auto& f : factors)
            std::cout << f.str() << '\n';
    } else {
        std::cout << classification_to_json(factors).dump() << '\n';
    }
    return kOk;
}

Perm4 sigma_flag(const std::string& text) {
    if (text.empty())
        throw UsageError("--sigma is required");
    try {
        return Perm4::parse(text);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("--sigma is not an element of S4: ") + e.what());
    }
}

int cmd_twist(const Options& o) {
    Perm4 sigma = sigma_flag(o.sigma);
    json extra = {{"sigma", sigma.str()}};
    TetModule m = TetModule::trivial();
    if (!o.module_path.empty()) {
        m = read_module(o.module_path);
        TetModule tw = twist(m, sigma);
        auto param = extract_eval_param(tw);
        if (auto* p = std::get_if<EvalParam>(&param))
            extra["parameter"] = p->value().str();
        emit_module(tw, o.emit, std::nullopt, extra);
        return kOk;
    }
    EvalModuleSpec spec = eval_spec_flags(o);
    extra["parameter"] = perm_on_param(sigma, spec.a).value().str();
    emit_module(twist(build_eval_module(spec), sigma), o.emit, std::nullopt, extra);
    return kOk;
}

int cmd_relatives(const Options& o) {
    EvalParam a = eval_param_flag(o);
    json rows = json::array();
    std::ostringstream table;
    for (const auto& b : BracketBasisId::all()) {
        Rational r = relative(a, b.i, b.j, b.k, b.l);
        rows.push_back({{"basis", b.str()}, {"relative", r.str()}});
        table << "(" << b.str() << ")  " << r.str() << '\n';
    }
    json orbit = json::array();
    for (const auto& x : orbit_of_param(a))
        orbit.push_back(x.str());
    if (o.emit == "table") {
        std::cout << table.str() << "orbit: " << orbit.dump() << '\n';
    } else if (o.emit == "csv") {
        std::cout << "basis,relative\n";
        for (const auto& row : rows)
            std::cout << '"' << row["basis"].get<std::string>() << "\"," << row["relative"].get<std::string>() << '\n';
    } else {
        std::cout << json{{"a", a.value().str()}, {"relatives", rows}, {"orbit", orbit}}.dump(2) << '\n';
    }
    return kOk;
}

int cmd_polyrealize(const Options& o) {
    if (o.d < 1)
        throw UsageError("--d must be a positive integer");
    if (o.betas.empty())
        throw UsageError("--betas is required");
    BetaQuad q = [&] {
        try {
            return BetaQuad::parse(o.betas);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Parse)
                throw UsageError(std::string("--betas: ") + e.what());
            throw;
        }
    }();
    TetModule p = build_poly_module(o.d, q);
    std::vector<BracketBasisId> ids =
        o.basis.empty() ? BracketBasisId::all() : std::vector<BracketBasisId>{BracketBasisId::parse(o.basis)};
    json bases = json::object();
    for (const auto& b : ids) {
        json polys = json::array();
        for (const auto& u : bracket_basis_vectors(o.d, q, b)) {
            json coeffs = json::array();
            for (const auto& c : u.coeffs)
                coeffs.push_back(c.str());
            polys.push_back({{"degree", u.d}, {"coefficients", coeffs}});
        }
        bases[b.str()] = polys;
    }
    json extra = {{"betas", q.str()}, {"parameter", cross_ratio(q).str()}};
    if (o.emit == "json")
        extra["bracket_bases"] = bases;
    emit_module(p, o.emit, std::nullopt, extra);
    return kOk;
}

int exit_for(const Error& e) {
    return e.code() == ErrorCode::Parse ? kUsage : kDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tetbox: exact modules for the tetrahedron Lie algebra"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("TETBOX_MAX_D")) {
        try {
            o.max_d = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "TETBOX_MAX_D must be an integer\n";
            return kUsage;
        }
    }
    const auto emit_values = CLI::IsMember({"json", "csv", "table"});
    auto add_emit = [&](CLI::App* sub) {
        sub->add_option("--emit", o.emit, "output format")->check(emit_values)->capture_default_str();
    };

    auto* eval = app.add_subcommand("eval", "evaluation module V_d(a)");
    eval->add_option("--d", o.d, "diameter")->required();
    eval->add_option("--a", o.a, "evaluation parameter p/q")->required();
    eval->add_option("--basis", o.basis, "emit in the [i,j,k,l]-basis, e.g. 0,1,2,3");
    add_emit(eval);

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", o.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"relations", "gradings", "transitions", "bilinear", "twisting", "drinfeld", "all"}));
    verify->add_option("--max-d", o.max_d, "largest diameter (env TETBOX_MAX_D)")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    add_emit(verify);

    auto* tens = app.add_subcommand("tensor", "tensor product of evaluation modules");
    tens->add_option("--spec", o.spec, "factors \"(d1,a1);(d2,a2);...\"")->required();
    add_emit(tens);

    auto* cls = app.add_subcommand("classify", "factor a module through its Drinfel'd polynomial");
    cls->add_option("--spec", o.spec, "factors \"(d1,a1);(d2,a2);...\"");
    cls->add_option("--module", o.module_path, "module JSON file");
    add_emit(cls);

    auto* tw = app.add_subcommand("twist", "twist a module by a permutation of {0,1,2,3}");
    tw->add_option("--d", o.d, "diameter");
    tw->add_option("--a", o.a, "evaluation parameter p/q");
    tw->add_option("--module", o.module_path, "module JSON file");
    tw->add_option("--sigma", o.sigma, "permutation, e.g. \"(0 1)(2 3)\"")->required();
    add_emit(tw);

    auto* rel = app.add_subcommand("relatives", "the 24 relatives of a");
    rel->add_option("--a", o.a, "evaluation parameter p/q")->required();
    add_emit(rel);

    auto* poly = app.add_subcommand("polyrealize", "homogeneous polynomial model P_d");
    poly->add_option("--d", o.d, "degree")->required();
    poly->add_option("--betas", o.betas, "\"b0,b1,b2,b3\"")->required();
    poly->add_option("--basis", o.basis, "only this [i,j,k,l] bracket basis");
    add_emit(poly);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval)
            return cmd_eval(o);
        if (*verify)
            return cmd_verify(o);
        if (*tens)
            return cmd_tensor(o);
        if (*cls)
            return cmd_classify(o);
        if (*tw)
            return cmd_twist(o);
        if (*rel)
            return cmd_relatives(o);
        if (*poly)
            return cmd_polyrealize(o);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e);
    }
    return kUsage;
}
