#include "jordanrep/json_io.hpp"

#include "jordanrep/error.hpp"

namespace jordanrep {

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) {
    if (j.is_string()) {
        r = Rational::parse(j.get<std::string>());
    } else if (j.is_number_integer()) {
        r = Rational(j.get<long>());
    } else {
        throw InputError("rational must be a string \"p/q\" or an integer");
    }
}

void to_json(nlohmann::json& j, const RatMatrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    j = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

void from_json(const nlohmann::json& j, RatMatrix& m) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw InputError("matrix JSON needs rows, cols and entries");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) throw InputError("matrix JSON row count mismatch");
    RatMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw InputError("matrix JSON column count mismatch in row " + std::to_string(i));
        for (std::size_t k = 0; k < cols; ++k) out(i, k) = entries[i][k].get<Rational>();
    }
    m = std::move(out);
}

}  // namespace jordanrep
