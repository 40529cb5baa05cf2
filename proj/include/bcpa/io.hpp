#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bcpa/construction.hpp"
#include "bcpa/correlation.hpp"
#include "bcpa/sequence.hpp"

namespace bcpa {

using AnySequence = std::variant<RootSequence, QuaternionSequence>;
using AnyArray = std::variant<RootArray, QuaternionArray>;

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

inline int int_field(const nlohmann::json& j, const char* name) {
    const auto& f = field(j, name);
    if (!f.is_number_integer())
        throw ParseError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

inline Quaternion<int> quat_from_json(const nlohmann::json& j, const char* name) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError(std::string("field '") + name + "' entries must be [w,x,y,z]");
    for (const auto& c : j)
        if (!c.is_number_integer())
            throw ParseError(std::string("field '") + name + "' components must be integers");
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

}  // namespace detail

inline nlohmann::json sequence_to_json(const RootSequence& s) {
    return {{"kind", "roots"}, {"r", s.r}, {"exponents", s.exponents}};
}

inline nlohmann::json sequence_to_json(const QuaternionSequence& s) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& q : s.values) values.push_back({q.w, q.x, q.y, q.z});
    return {{"kind", "quaternion"}, {"values", std::move(values)}};
}

inline AnySequence sequence_from_json(const nlohmann::json& j) {
    const auto& kind = detail::field(j, "kind");
    if (kind == "roots") {
        RootSequence s;
        s.r = detail::int_field(j, "r");
        if (s.r < 1) throw ParseError("field 'r' must be >= 1");
        const auto& exps = detail::field(j, "exponents");
        if (!exps.is_array()) throw ParseError("field 'exponents' must be an array");
        for (const auto& e : exps) {
            if (!e.is_number_integer())
                throw ParseError("field 'exponents' entries must be integers");
            const int v = e.get<int>();
            if (v < 0 || v >= s.r)
                throw ParseError("field 'exponents' entry " + std::to_string(v) +
                                 " is outside [0, r)");
            s.exponents.push_back(v);
        }
        if (s.exponents.empty()) throw ParseError("field 'exponents' must be non-empty");
        return s;
    }
    if (kind == "quaternion") {
        QuaternionSequence s;
        const auto& values = detail::field(j, "values");
        if (!values.is_array()) throw ParseError("field 'values' must be an array");
        for (const auto& q : values) s.values.push_back(detail::quat_from_json(q, "values"));
        if (s.values.empty()) throw ParseError("field 'values' must be non-empty");
        return s;
    }
    throw ParseError("field 'kind' must be 'roots' or 'quaternion'");
}

// Array files hold the cells flattened row-major, axis 0 = j.
inline nlohmann::json array_to_json(const RootArray& a) {
    return {{"kind", "roots"},
            {"r", a.r},
            {"dims", a.cells.dims()},
            {"data", std::vector<int>(a.cells.data().begin(), a.cells.data().end())}};
}

inline nlohmann::json array_to_json(const QuaternionArray& a) {
    nlohmann::json data = nlohmann::json::array();
    for (const auto& q : a.cells.data()) data.push_back({q.w, q.x, q.y, q.z});
    return {{"kind", "quaternion"}, {"dims", a.cells.dims()}, {"data", std::move(data)}};
}

inline AnyArray array_from_json(const nlohmann::json& j) {
    const auto& kind = detail::field(j, "kind");
    const auto& dims_json = detail::field(j, "dims");
    if (!dims_json.is_array() || dims_json.empty())
        throw ParseError("field 'dims' must be a non-empty array");
    std::vector<int> dims;
    std::size_t cell_count = 1;
    for (const auto& d : dims_json) {
        if (!d.is_number_integer() || d.get<int>() < 1)
            throw ParseError("field 'dims' entries must be positive integers");
        dims.push_back(d.get<int>());
        cell_count *= static_cast<std::size_t>(dims.back());
    }
    const auto& data = detail::field(j, "data");
    if (!data.is_array() || data.size() != cell_count)
        throw ParseError("field 'data' must hold exactly " + std::to_string(cell_count) +
                         " entries");
    if (kind == "roots") {
        const int r = detail::int_field(j, "r");
        if (r < 1) throw ParseError("field 'r' must be >= 1");
        RootArray a{r, NdArray<int>(dims)};
        std::size_t f = 0;
        for (const auto& e : data) {
            if (!e.is_number_integer())
                throw ParseError("field 'data' entries must be integers");
            const int v = e.get<int>();
            if (v < 0 || v >= r)
                throw ParseError("field 'data' entry " + std::to_string(v) +
                                 " is outside [0, r)");
            a.cells[f++] = v;
        }
        return a;
    }
    if (kind == "quaternion") {
        QuaternionArray a{NdArray<Quaternion<int>>(dims)};
        std::size_t f = 0;
        for (const auto& q : data) a.cells[f++] = detail::quat_from_json(q, "data");
        return a;
    }
    throw ParseError("field 'kind' must be 'roots' or 'quaternion'");
}

// Sparse export: dims, tol, and the non-zero entries only.
inline nlohmann::json correlation_to_json(const ComplexCorrelation& res) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : nonzero_census(res).entries)
        entries.push_back(
            {{"shift", e.shift}, {"re", e.value.real()}, {"im", e.value.imag()}});
    nlohmann::json j{{"dims", res.dims}, {"tol", res.tol}, {"nonzero", std::move(entries)}};
    if (res.rel_tol > 0.0) j["rel_tol"] = res.rel_tol;
    return j;
}

inline nlohmann::json correlation_to_json(const QuaternionCorrelation& res) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : nonzero_census(res).entries)
        entries.push_back({{"shift", e.shift},
                           {"w", e.value.w},
                           {"x", e.value.x},
                           {"y", e.value.y},
                           {"z", e.value.z}});
    nlohmann::json j{{"dims", res.dims}, {"tol", res.tol}, {"nonzero", std::move(entries)}};
    if (res.rel_tol > 0.0) j["rel_tol"] = res.rel_tol;
    return j;
}

template <class V>
nlohmann::json zcz_report_to_json(const ZczReport<V>& report) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : report.pairs) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : p.entries) {
            if constexpr (std::is_same_v<V, std::complex<double>>)
                entries.push_back(
                    {{"shift", e.shift}, {"re", e.value.real()}, {"im", e.value.imag()}});
            else
                entries.push_back({{"shift", e.shift},
                                   {"w", e.value.w},
                                   {"x", e.value.x},
                                   {"y", e.value.y},
                                   {"z", e.value.z}});
        }
        pairs.push_back({{"k1", p.k1},
                         {"k2", p.k2},
                         {"nonzero", p.nonzero_count},
                         {"peak", p.peak},
                         {"entries", std::move(entries)}});
    }
    return {{"d", report.d},
            {"cells", report.cells},
            {"zone_ratio", report.zone_ratio},
            {"pairs", std::move(pairs)}};
}

inline nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

inline AnySequence load_sequence(const std::filesystem::path& path) {
    return sequence_from_json(load_json(path));
}

inline AnyArray load_array(const std::filesystem::path& path) {
    return array_from_json(load_json(path));
}

}  // namespace bcpa
