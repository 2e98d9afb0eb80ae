#pragma once

#include "kassembly/errors.hpp"
#include "kassembly/graded_algebra.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace kassembly {

// Algebra description document: {"generators": [{"name": "u", "degree": 2}, ...]}.
inline FreeGradedAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw parse_error("algebra document must be an object with a \"generators\" array");
    std::vector<GeneratorSpec> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g.contains("degree") ||
            !g["name"].is_string() || !g["degree"].is_number_integer())
            throw parse_error("each generator needs a string \"name\" and an integer \"degree\"");
        gens.push_back(GeneratorSpec{g["name"].get<std::string>(), g["degree"].get<int>()});
    }
    return FreeGradedAlgebra(std::move(gens));
}

inline FreeGradedAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open algebra file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("algebra file " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

} // namespace kassembly
