#include "tetbox/io.hpp"

#include "tetbox/error.hpp"

#include <algorithm>
#include <sstream>

namespace tetbox {

nlohmann::json matrix_to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw Error(ErrorCode::Parse, "matrix entries must be \"p/q\" strings or integers");
}

} // namespace

ExactMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw Error(ErrorCode::Parse, "matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

nlohmann::json poly_to_json(const UniPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coefficients())
        out.push_back(c.str());
    return out;
}

nlohmann::json module_to_json(const TetModule& m, const std::optional<std::string>& basis) {
    nlohmann::json j;
    j["schema"] = kSchema;
    j["dim"] = m.dim();
    j["label"] = m.label();
    if (basis)
        j["basis"] = *basis;
    nlohmann::json action = nlohmann::json::object();
    for (const auto& p : all_pairs())
        action[p.key()] = matrix_to_json(m.action(p));
    j["action"] = std::move(action);
    return j;
}

TetModule module_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::Parse, "module document must be a JSON object");
    if (j.contains("schema") && j["schema"] != kSchema)
        throw Error(ErrorCode::Parse, "unsupported schema " + j["schema"].dump());
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw Error(ErrorCode::Parse, "\"dim\" must be a positive integer");
    if (!j.contains("action") || !j["action"].is_object())
        throw Error(ErrorCode::Parse, "\"action\" object missing");
    const auto dim = j["dim"].get<std::size_t>();
    std::map<GenPair, ExactMatrix> actions;
    for (const auto& [key, value] : j["action"].items())
        actions[GenPair::from_key(key)] = matrix_from_json(value);
    std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
    return TetModule::from_map(dim, actions, label);
}

std::string module_to_csv(const TetModule& m) {
    std::ostringstream os;
    os << "generator,row,col,value\n";
    for (const auto& p : all_pairs()) {
        const auto& a = m.action(p);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                os << p.key() << ',' << r << ',' << c << ',' << a(r, c).str() << '\n';
    }
    return os.str();
}

std::string module_to_table(const TetModule& m) {
    std::ostringstream os;
    if (!m.label().empty())
        os << m.label() << "  (dim " << m.dim() << ")\n";
    for (const auto& p : all_pairs()) {
        const auto& a = m.action(p);
        std::size_t width = 1;
        for (const auto& x : a.entries())
            width = std::max(width, x.str().size());
        os << '\n' << p.key() << ":\n";
        for (std::size_t r = 0; r < a.rows(); ++r) {
            os << "  [";
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::string s = a(r, c).str();
                os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
            }
            os << "]\n";
        }
    }
    return os.str();
}

nlohmann::json classification_to_json(const std::vector<EvalModuleSpec>& factors) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : factors)
        out.push_back({{"d", f.d}, {"a", f.a.value().str()}});
    return out;
}

} // namespace tetbox
