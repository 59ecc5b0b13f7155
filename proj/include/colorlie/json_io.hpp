#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "colorlie/cyclotomic.hpp"
#include "colorlie/gmat.hpp"
#include "colorlie/grading.hpp"

namespace colorlie::io {

using nlohmann::json;

// Floats are emitted with 15 significant digits.
inline json float15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return json::parse(buf);
}

// {"order": M, "coeffs": [["num","den"], ...]} over the power basis
// 1, zeta, ..., zeta^{M-1}, big integers as decimal strings.
inline json to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const Rational& r : c.power_basis())
        coeffs.push_back({numerator(r).str(), denominator(r).str()});
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
    long order = j.at("order").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& pair : j.at("coeffs")) {
        Int num(pair.at(0).get<std::string>());
        Int den(pair.at(1).get<std::string>());
        coeffs.emplace_back(num, den);
    }
    return Cyclotomic(order, std::move(coeffs));
}

inline json to_json(const grading::FactorTable& t) {
    json sectors = json::array();
    for (long i = 0; i < t.size(); ++i) sectors.push_back(t.element(i).label());
    json entries = json::array();
    for (long i = 0; i < t.size(); ++i) {
        json row = json::array();
        for (long k = 0; k < t.size(); ++k) row.push_back(to_json(t.at(i, k)));
        entries.push_back(std::move(row));
    }
    return {{"exact", true},
            {"p", t.p()},
            {"q", t.q()},
            {"sectors", sectors},
            {"entries", entries}};
}

inline grading::FactorTable factor_table_from_json(const json& j) {
    grading::FactorTable t(j.at("p").get<int>(), j.at("q").get<int>());
    const auto& entries = j.at("entries");
    if (static_cast<long>(entries.size()) != t.size())
        throw std::domain_error("factor table row count mismatch");
    for (long i = 0; i < t.size(); ++i)
        for (long k = 0; k < t.size(); ++k)
            t.set(i, k, cyclotomic_from_json(entries.at(static_cast<size_t>(i))
                                                  .at(static_cast<size_t>(k))));
    return t;
}

// array-of-arrays of entries plus the sector label when graded
inline json to_json(const gmat::GradedMatrix& m) {
    json rows = json::array();
    for (long r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.dim(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    json out = {{"exact", true}, {"dim", m.dim()}, {"entries", rows}};
    out["grade"] = m.grade() ? json(m.grade()->label()) : json(nullptr);
    return out;
}

}  // namespace colorlie::io
