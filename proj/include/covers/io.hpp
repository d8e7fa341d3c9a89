#ifndef COVERS_IO_HPP
#define COVERS_IO_HPP

#include <string>
#include <utility>

#include <json.hpp>

#include "covers/core.hpp"

namespace covers {
namespace io_detail {

using ojson = nlohmann::ordered_json;

inline std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline ojson parse_document(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("parse error at byte " + std::to_string(e.byte) + " (line " +
                         std::to_string(line_of_byte(text, e.byte)) + "): " + e.what());
    }
}

inline void require_keys(const ojson& obj, const char* what,
                         std::initializer_list<const char*> keys) {
    if (!obj.is_object()) throw ValidationError(std::string(what) + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* k : keys)
            if (key == k) known = true;
        if (!known)
            throw ValidationError(std::string(what) + ": unknown field \"" + key + "\"");
    }
    for (const char* k : keys)
        if (!obj.contains(k))
            throw ValidationError(std::string(what) + ": missing field \"" + k + "\"");
}

inline std::string get_string(const ojson& v, const std::string& where) {
    if (!v.is_string()) throw ValidationError(where + ": expected a string");
    return v.get<std::string>();
}

inline long long get_integer(const ojson& v, const std::string& where) {
    if (!v.is_number_integer()) throw ValidationError(where + ": expected an integer");
    return v.get<long long>();
}

} // namespace io_detail

// ---------------------------------------------------------------------------
// Instance documents
//   { "kind": "...", "points": [...], "sets": [ {"id","members","mult"}... ] }
// ---------------------------------------------------------------------------

inline CoverInstance load_instance(const std::string& text) {
    using namespace io_detail;
    ojson doc = parse_document(text);
    require_keys(doc, "instance", {"kind", "points", "sets"});

    CoverInstance inst;
    inst.kind = parse_cover_kind(get_string(doc["kind"], "instance.kind"));

    if (!doc["points"].is_array()) throw ValidationError("instance.points: expected an array");
    for (std::size_t i = 0; i < doc["points"].size(); ++i)
        inst.points.push_back(
            get_string(doc["points"][i], "instance.points[" + std::to_string(i) + "]"));

    if (!doc["sets"].is_array()) throw ValidationError("instance.sets: expected an array");
    for (std::size_t i = 0; i < doc["sets"].size(); ++i) {
        const std::string where = "instance.sets[" + std::to_string(i) + "]";
        const ojson& js = doc["sets"][i];
        require_keys(js, where.c_str(), {"id", "members", "mult"});
        CoverSet s;
        s.id = get_string(js["id"], where + ".id");
        if (!js["members"].is_array())
            throw ValidationError(where + ".members: expected an array");
        for (std::size_t m = 0; m < js["members"].size(); ++m)
            s.members.push_back(
                get_string(js["members"][m], where + ".members[" + std::to_string(m) + "]"));
        long long mult = get_integer(js["mult"], where + ".mult");
        if (mult < 1 || mult > static_cast<long long>(kMaxMultiplicity))
            throw ValidationError(where + ".mult: " + std::to_string(mult) +
                                  " outside [1, 65536]");
        s.mult = static_cast<std::uint32_t>(mult);
        inst.sets.push_back(std::move(s));
    }

    validate_instance(inst);
    return inst;
}

/// Canonical serialization: fixed field order, two-space indentation, one
/// trailing newline.  load_instance(emit_instance(x)) == x, byte for byte
/// on re-emission.
inline std::string emit_instance(const CoverInstance& inst) {
    using namespace io_detail;
    ojson doc;
    doc["kind"] = to_string(inst.kind);
    doc["points"] = ojson::array();
    for (const auto& p : inst.points) doc["points"].push_back(p);
    doc["sets"] = ojson::array();
    for (const auto& s : inst.sets) {
        ojson js;
        js["id"] = s.id;
        js["members"] = ojson::array();
        for (const auto& m : s.members) js["members"].push_back(m);
        js["mult"] = s.mult;
        doc["sets"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Coloring documents
//   { "k": 2, "assignments": [ {"set":"A","copy":0,"color":1}, ... ] }
// ---------------------------------------------------------------------------

inline std::pair<int, Coloring> load_coloring(const std::string& text) {
    using namespace io_detail;
    ojson doc = parse_document(text);
    require_keys(doc, "coloring", {"k", "assignments"});

    long long k = get_integer(doc["k"], "coloring.k");
    if (k < 1) throw ValidationError("coloring.k: must be positive");

    Coloring c;
    if (!doc["assignments"].is_array())
        throw ValidationError("coloring.assignments: expected an array");
    for (std::size_t i = 0; i < doc["assignments"].size(); ++i) {
        const std::string where = "coloring.assignments[" + std::to_string(i) + "]";
        const ojson& ja = doc["assignments"][i];
        require_keys(ja, where.c_str(), {"set", "copy", "color"});
        SetInstance si;
        si.set_id = get_string(ja["set"], where + ".set");
        long long copy = get_integer(ja["copy"], where + ".copy");
        long long color = get_integer(ja["color"], where + ".color");
        if (copy < 0) throw ValidationError(where + ".copy: must be non-negative");
        if (color < 0) throw ValidationError(where + ".color: must be non-negative");
        si.copy = static_cast<std::uint32_t>(copy);
        if (c.assignments.count(si))
            throw ValidationError(where + ": duplicate assignment for set \"" + si.set_id +
                                  "\" copy " + std::to_string(copy));
        c.assignments[si] = static_cast<Color>(color);
    }
    return {static_cast<int>(k), c};
}

/// Canonical: assignments ordered by (set id, copy).
inline std::string emit_coloring(int k, const Coloring& c) {
    using namespace io_detail;
    ojson doc;
    doc["k"] = k;
    doc["assignments"] = ojson::array();
    for (const auto& [si, color] : c.assignments) {
        ojson ja;
        ja["set"] = si.set_id;
        ja["copy"] = si.copy;
        ja["color"] = color;
        doc["assignments"].push_back(std::move(ja));
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Point lists (orders, verification subsets): [ "p0", "p1", ... ]
// ---------------------------------------------------------------------------

inline std::vector<PointId> load_point_list(const std::string& text) {
    using namespace io_detail;
    ojson doc = parse_document(text);
    if (!doc.is_array()) throw ValidationError("point list: expected an array");
    std::vector<PointId> out;
    for (std::size_t i = 0; i < doc.size(); ++i)
        out.push_back(get_string(doc[i], "point list[" + std::to_string(i) + "]"));
    return out;
}

inline std::string emit_point_list(const std::vector<PointId>& pts) {
    using namespace io_detail;
    ojson doc = ojson::array();
    for (const auto& p : pts) doc.push_back(p);
    return doc.dump(2) + "\n";
}

} // namespace covers

#endif // COVERS_IO_HPP
