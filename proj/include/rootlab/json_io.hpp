#pragma once

#include <string>

#include <json.hpp>

#include "rootlab/involutions.hpp"
#include "rootlab/root_system.hpp"

namespace rootlab {

// Insertion-ordered JSON keeps every serialized document byte-stable.
using ordered_json = nlohmann::ordered_json;

inline ordered_json descriptor_to_json(const Descriptor& d) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : d.components)
        comps.push_back({{"family", c.family}, {"rank", c.rank}});
    return ordered_json{{"components", comps}};
}

inline Descriptor descriptor_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw InputError("descriptor JSON needs a components array");
    Descriptor d;
    for (const auto& c : j["components"]) {
        if (!c.contains("family") || !c.contains("rank"))
            throw InputError("descriptor component needs family and rank");
        d.components.push_back({c["family"].get<std::string>(), c["rank"].get<int>()});
    }
    if (d.components.empty())
        throw InputError("descriptor JSON has no components");
    return d;
}

// Rationals serialize as integers when possible, "p/q" strings otherwise.
inline ordered_json rat_to_json(const Rat& x) {
    if (x.is_integer())
        return ordered_json(x.num());
    return ordered_json(x.str());
}

inline Rat rat_from_json(const ordered_json& j) {
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    if (j.is_string())
        return Rat::parse(j.get<std::string>());
    throw InputError("expected an integer or a \"p/q\" string");
}

inline ordered_json vec_to_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const Rat& x : v)
        arr.push_back(rat_to_json(x));
    return arr;
}

inline Vec vec_from_json(const ordered_json& j) {
    if (!j.is_array())
        throw InputError("expected an array of rationals");
    Vec out;
    for (const auto& x : j)
        out.push_back(rat_from_json(x));
    return out;
}

inline ordered_json mat_to_json(const Mat& m) {
    ordered_json arr = ordered_json::array();
    for (const Vec& row : m)
        arr.push_back(vec_to_json(row));
    return arr;
}

inline Mat mat_from_json(const ordered_json& j) {
    if (!j.is_array() || j.empty())
        throw InputError("expected a nonempty matrix");
    Mat out;
    for (const auto& row : j)
        out.push_back(vec_from_json(row));
    size_t n = out.size();
    for (const Vec& row : out)
        if (row.size() != n)
            throw InputError("matrix must be square");
    return out;
}

// Diagram JSON with 1-based indices:
// {"label":"BI","r":5,"l":2,"components":[...],"black":[3,4,5],"arrows":[]}
inline ordered_json diagram_to_json(const SatakeDiagram& d) {
    ordered_json o;
    o["label"] = d.label;
    o["r"] = d.r;
    o["l"] = d.l;
    o["components"] = descriptor_to_json(d.rs.descriptor())["components"];
    ordered_json black = ordered_json::array();
    for (int b : d.black)
        black.push_back(b + 1);
    o["black"] = black;
    ordered_json arrows = ordered_json::array();
    for (auto [a, b] : d.arrows)
        arrows.push_back(ordered_json::array({a + 1, b + 1}));
    o["arrows"] = arrows;
    return o;
}

} // namespace rootlab
