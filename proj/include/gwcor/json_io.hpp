// JSON serialization of the public value types: base fields, symmetric
// forms, Laurent entries, correspondences, and invariant tuples.
//
// Conventions:
//   * scalars travel as strings ("3", "-7/2", "104729"), never as JSON
//     numbers, so exact values survive any consumer;
//   * a field is {"type": "Q"} or {"type": "Fp", "p": 5};
//   * a symmetric form is {"field": ..., "gram": [[...], ...]};
//   * a Laurent entry is {"val": v, "coeffs": [c0, c1, ...]} meaning
//     t^v * (c0 + c1 t + ...);
//   * a correspondence is {"field", "source", "target", "rank", "gram",
//     "action"}, with "source"/"target" in {"pt", "gm"} and "action" an
//     empty array when the target is "pt".
//
// Parsing failures raise input errors whose messages name the JSON path of
// the offending member.  Serialization always emits normalized values, so
// parse(serialize(x)) == x.

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "json.hpp"

#include "gwcor/correspondence.hpp"
#include "gwcor/errors.hpp"
#include "gwcor/fields.hpp"
#include "gwcor/gw.hpp"
#include "gwcor/laurent.hpp"
#include "gwcor/matrix.hpp"
#include "gwcor/quadspace.hpp"

namespace gwcor {

using nlohmann::json;

namespace jsondetail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw input_error("invalid input at " + path + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing member");
    return *it;
}

inline std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

inline long long get_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

} // namespace jsondetail

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

// A parsed field tag, used to dispatch to the right template instantiation.
struct FieldDesc {
    bool rational = true;
    std::uint64_t p = 0;
};

inline FieldDesc field_from_json(const json& j, const std::string& path = "field") {
    namespace jd = jsondetail;
    const std::string type = jd::get_string(jd::member(j, "type", path), path + ".type");
    if (type == "Q") return FieldDesc{true, 0};
    if (type == "Fp") {
        const long long p = jd::get_integer(jd::member(j, "p", path), path + ".p");
        if (p < 3) jd::fail(path + ".p", "expected an odd prime >= 3");
        return FieldDesc{false, static_cast<std::uint64_t>(p)};
    }
    jd::fail(path + ".type", "expected \"Q\" or \"Fp\"");
}

inline json field_to_json(const RationalField&) { return json{{"type", "Q"}}; }
inline json field_to_json(const PrimeField& k) {
    return json{{"type", "Fp"}, {"p", k.modulus()}};
}

// ---------------------------------------------------------------------------
// Scalars and matrices of scalars
// ---------------------------------------------------------------------------

template <class K>
typename K::Elem scalar_from_json(const K& k, const json& j, const std::string& path) {
    namespace jd = jsondetail;
    if (!j.is_string()) jd::fail(path, "expected a scalar string");
    try {
        return k.parse(j.get<std::string>());
    } catch (const input_error& e) {
        jd::fail(path, e.what());
    }
}

template <class K>
Mat<typename K::Elem> scalar_matrix_from_json(const K& k, const json& j,
                                              const std::string& path) {
    namespace jd = jsondetail;
    if (!j.is_array()) jd::fail(path, "expected an array of rows");
    const std::size_t n = j.size();
    Mat<typename K::Elem> m(n, n, k.zero());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = j[i];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) jd::fail(rp, "expected a row array");
        if (row.size() != n) jd::fail(rp, "expected a square matrix");
        for (std::size_t c = 0; c < n; ++c)
            m.at(i, c) =
                scalar_from_json(k, row[c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

template <class K>
json scalar_matrix_to_json(const K& k, const Mat<typename K::Elem>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(k.str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Symmetric forms
// ---------------------------------------------------------------------------

template <class K>
QuadSpace<K> quadspace_from_json(const K& k, const json& j,
                                 const std::string& path = "form") {
    namespace jd = jsondetail;
    auto g = scalar_matrix_from_json(k, jd::member(j, "gram", path), path + ".gram");
    return make_quadspace(k, std::move(g));
}

template <class K>
json quadspace_to_json(const QuadSpace<K>& q) {
    return json{{"field", field_to_json(q.k)},
                {"gram", scalar_matrix_to_json(q.k, q.gram)}};
}

// ---------------------------------------------------------------------------
// Laurent entries
// ---------------------------------------------------------------------------

template <class K>
Laurent<K> laurent_from_json(const K& k, const json& j, const std::string& path) {
    namespace jd = jsondetail;
    const LaurentRing<K> R{k};
    const long long val = jd::get_integer(jd::member(j, "val", path), path + ".val");
    const auto& cj = jd::member(j, "coeffs", path);
    if (!cj.is_array()) jd::fail(path + ".coeffs", "expected an array");
    std::vector<typename K::Elem> coeffs;
    coeffs.reserve(cj.size());
    for (std::size_t i = 0; i < cj.size(); ++i)
        coeffs.push_back(scalar_from_json(
            k, cj[i], path + ".coeffs[" + std::to_string(i) + "]"));
    Pol<typename K::Elem> body;
    body.c = std::move(coeffs);
    return R.make(static_cast<long>(val), std::move(body));
}

template <class K>
json laurent_to_json(const K& k, const Laurent<K>& L) {
    json coeffs = json::array();
    for (const auto& c : L.body.c) coeffs.push_back(k.str(c));
    return json{{"val", L.body.c.empty() ? 0 : L.val}, {"coeffs", std::move(coeffs)}};
}

template <class K>
Mat<Laurent<K>> laurent_matrix_from_json(const K& k, const json& j,
                                         const std::string& path,
                                         std::size_t expected_rank) {
    namespace jd = jsondetail;
    const LaurentRing<K> R{k};
    if (!j.is_array()) jd::fail(path, "expected an array of rows");
    if (j.size() != expected_rank) jd::fail(path, "expected rank many rows");
    Mat<Laurent<K>> m(expected_rank, expected_rank, R.zero());
    for (std::size_t i = 0; i < expected_rank; ++i) {
        const auto& row = j[i];
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) jd::fail(rp, "expected a row array");
        if (row.size() != expected_rank) jd::fail(rp, "expected a square matrix");
        for (std::size_t c = 0; c < expected_rank; ++c)
            m.at(i, c) =
                laurent_from_json(k, row[c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

template <class K>
json laurent_matrix_to_json(const K& k, const Mat<Laurent<K>>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(laurent_to_json(k, m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Correspondences
// ---------------------------------------------------------------------------

inline AffineModel model_from_json(const json& j, const std::string& path) {
    namespace jd = jsondetail;
    const std::string s = jd::get_string(j, path);
    if (s == "pt") return AffineModel::Pt;
    if (s == "gm") return AffineModel::Gm;
    jd::fail(path, "expected \"pt\" or \"gm\"");
}

inline std::string model_to_json(AffineModel m) {
    return m == AffineModel::Pt ? "pt" : "gm";
}

template <class K>
Correspondence<K> corr_from_json(const K& k, const json& j,
                                 const std::string& path = "correspondence") {
    namespace jd = jsondetail;
    const LaurentRing<K> R{k};
    Correspondence<K> c{k,
                        model_from_json(jd::member(j, "source", path), path + ".source"),
                        model_from_json(jd::member(j, "target", path), path + ".target"),
                        0,
                        Mat<Laurent<K>>(),
                        Mat<Laurent<K>>()};
    const long long rank = jd::get_integer(jd::member(j, "rank", path), path + ".rank");
    if (rank < 0) jd::fail(path + ".rank", "expected a nonnegative rank");
    c.rank = static_cast<std::size_t>(rank);
    c.gram = laurent_matrix_from_json(k, jd::member(j, "gram", path),
                                      path + ".gram", c.rank);
    if (c.target == AffineModel::Gm) {
        c.action = laurent_matrix_from_json(k, jd::member(j, "action", path),
                                            path + ".action", c.rank);
    } else {
        const auto it = j.find("action");
        if (it != j.end() && !(it->is_array() && it->empty()))
            jd::fail(path + ".action",
                     "a correspondence into pt carries no action; use [] or omit");
    }
    validate(c);
    return c;
}

template <class K>
json corr_to_json(const Correspondence<K>& c) {
    return json{{"field", field_to_json(c.k)},
                {"source", model_to_json(c.source)},
                {"target", model_to_json(c.target)},
                {"rank", c.rank},
                {"gram", laurent_matrix_to_json(c.k, c.gram)},
                {"action", c.target == AffineModel::Gm
                               ? laurent_matrix_to_json(c.k, c.action)
                               : json::array()}};
}

// ---------------------------------------------------------------------------
// Invariant tuples and places
// ---------------------------------------------------------------------------

inline json place_to_json(const Place& pl) {
    return pl.real ? json("real") : json(pl.p.get_str());
}

template <class K>
json invariants_to_json(const K& k, const GWInvariants<K>& inv) {
    json out{{"rank", inv.rank}, {"disc", k.str(inv.disc)}};
    if constexpr (!K::is_finite) {
        out["signature"] = inv.signature;
        json hm = json::array();
        for (const auto& pl : inv.hasse_minus) hm.push_back(place_to_json(pl));
        out["hasse_minus"] = std::move(hm);
    }
    return out;
}

} // namespace gwcor
