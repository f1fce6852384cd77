#include "rap/io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

#include "rap/errors.hpp"
#include "rap/gluing.hpp"

namespace rap {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw io_error(msg); }

void reject_unknown_keys(const ojson& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail("unknown key \"" + it.key() + "\" in " + where);
}

int require_int(const ojson& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) fail("missing key \"" + key + "\" in " + where);
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail("key \"" + key + "\" in " + where + " is not an integer");
    return v.get<int>();
}

} // namespace

CombinatorialPolytope parse_polytope(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("JSON parse failure: ") + e.what());
    }
    if (!j.is_object()) fail("top level is not an object");
    reject_unknown_keys(j, {"dim", "facet_count", "vertices", "pairings"}, "top level");

    CombinatorialPolytope p;
    p.dim = require_int(j, "dim", "top level");
    p.facet_count = require_int(j, "facet_count", "top level");

    if (!j.contains("vertices") || !j.at("vertices").is_array())
        fail("\"vertices\" missing or not an array");
    for (const auto& jv : j.at("vertices")) {
        if (!jv.is_object()) fail("vertex entry is not an object");
        reject_unknown_keys(jv, {"id", "type", "facets"}, "vertex entry");
        VertexRecord v;
        if (!jv.contains("id") || !jv.at("id").is_string()) fail("vertex id missing or not a string");
        v.id = jv.at("id").get<std::string>();
        if (!jv.contains("type") || !jv.at("type").is_string())
            fail("vertex \"" + v.id + "\": type missing or not a string");
        const std::string t = jv.at("type").get<std::string>();
        if (t == "finite")
            v.type = VertexType::finite;
        else if (t == "ideal")
            v.type = VertexType::ideal;
        else
            fail("vertex \"" + v.id + "\": type \"" + t + "\" is neither finite nor ideal");
        if (!jv.contains("facets") || !jv.at("facets").is_array())
            fail("vertex \"" + v.id + "\": facets missing or not an array");
        for (const auto& jf : jv.at("facets")) {
            if (!jf.is_number_integer())
                fail("vertex \"" + v.id + "\": facet entry is not an integer");
            v.facets.push_back(jf.get<int>());
        }
        FacetSet canon = v.facets;
        canonicalize(canon);
        if (canon.size() != v.facets.size())
            fail("vertex \"" + v.id + "\": duplicate facet index");
        v.facets = std::move(canon);
        p.vertices.push_back(std::move(v));
    }

    if (j.contains("pairings")) {
        const auto& jp = j.at("pairings");
        if (!jp.is_object()) fail("\"pairings\" is not an object");
        for (auto it = jp.begin(); it != jp.end(); ++it) {
            if (p.vertex_index(it.key()) < 0)
                fail("pairing keyed by unknown vertex \"" + it.key() + "\"");
            if (!it.value().is_array()) fail("pairing at \"" + it.key() + "\" is not an array");
            CuspPairing pairing;
            for (const auto& jpair : it.value()) {
                if (!jpair.is_array() || jpair.size() != 2 || !jpair[0].is_number_integer() ||
                    !jpair[1].is_number_integer())
                    fail("pairing at \"" + it.key() + "\": pair is not a 2-element integer array");
                int a = jpair[0].get<int>(), b = jpair[1].get<int>();
                pairing.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(pairing.begin(), pairing.end());
            p.pairings[it.key()] = std::move(pairing);
        }
    }

    check_structure(p);
    return p;
}

std::string serialize_polytope(const CombinatorialPolytope& p) {
    ojson j;
    j["dim"] = p.dim;
    j["facet_count"] = p.facet_count;
    j["vertices"] = ojson::array();
    for (const auto& v : p.vertices) {
        ojson jv;
        jv["id"] = v.id;
        jv["type"] = v.type == VertexType::finite ? "finite" : "ideal";
        jv["facets"] = v.facets;
        j["vertices"].push_back(std::move(jv));
    }
    if (!p.pairings.empty()) {
        ojson jp = ojson::object();
        // key order follows the vertex list, not the map
        for (const auto& v : p.vertices) {
            auto it = p.pairings.find(v.id);
            if (it == p.pairings.end()) continue;
            ojson jl = ojson::array();
            for (const auto& [a, b] : it->second) jl.push_back(ojson::array({a, b}));
            jp[v.id] = std::move(jl);
        }
        j["pairings"] = std::move(jp);
    }
    return j.dump(2) + "\n";
}

std::string serialize_gluing_map(const GluingMap& m) {
    ojson j;
    j["glued_facet"] = m.glued_facet;
    j["facet_fate"] = ojson::array();
    for (std::size_t f = 0; f < m.facet_fate.size(); ++f) {
        const auto& r = m.facet_fate[f];
        ojson jr;
        jr["facet"] = static_cast<int>(f);
        switch (r.fate) {
        case FacetFate::removed: jr["fate"] = "removed"; break;
        case FacetFate::merged:
            jr["fate"] = "merged";
            jr["new"] = r.new_index;
            break;
        case FacetFate::kept_pair:
            jr["fate"] = "kept_pair";
            jr["original"] = r.new_index;
            jr["mirror"] = r.mirror_index;
            break;
        }
        j["facet_fate"].push_back(std::move(jr));
    }
    j["vertex_fate"] = ojson::array();
    for (const auto& r : m.vertex_fate) {
        ojson jr;
        jr["id"] = r.id;
        switch (r.fate) {
        case VertexFate::dropped: jr["fate"] = "dropped"; break;
        case VertexFate::identified: jr["fate"] = "identified"; break;
        case VertexFate::duplicated:
            jr["fate"] = "duplicated";
            jr["mirror"] = r.mirror_id;
            break;
        }
        j["vertex_fate"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

} // namespace rap
