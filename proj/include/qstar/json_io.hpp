#pragma once

// System descriptions as JSON: {"s": 3, "prefix": [["1/3","1/3","1/3"]],
// "period": [["1/2","1/4","1/4"]]}. Entries are exact "p/q" or decimal
// strings; "prefix" may be omitted.

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qstar/rational.hpp"
#include "qstar/system.hpp"

namespace qstar {

inline stochastic_column column_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::domain_error("column must be an array of rationals");
    stochastic_column col;
    for (const auto& entry : arr) {
        if (entry.is_string())
            col.probs.push_back(parse_rational(entry.get<std::string>()));
        else if (entry.is_number_integer())
            col.probs.push_back(rational(entry.get<long long>()));
        else
            throw std::domain_error("column entries must be rational strings");
    }
    return col;
}

inline qstar_system system_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("s") || !doc["s"].is_number_integer())
        throw std::domain_error("config must be an object with integer field \"s\"");
    qstar_system sys;
    sys.base = doc["s"].get<int>();
    if (doc.contains("prefix"))
        for (const auto& col : doc["prefix"]) sys.prefix.push_back(column_from_json(col));
    if (!doc.contains("period") || !doc["period"].is_array() || doc["period"].empty())
        throw std::domain_error("config needs a nonempty \"period\" array of columns");
    for (const auto& col : doc["period"]) sys.period.push_back(column_from_json(col));
    return sys;
}

inline qstar_system load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("config parse error: " + std::string(e.what()));
    }
    return system_from_json(doc);
}

}  // namespace qstar
