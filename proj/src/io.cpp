#include "toric/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toric/errors.hpp"

namespace toric {

namespace {

using json = nlohmann::ordered_json;

int get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw input_error(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::pair<int, int> get_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw input_error(std::string(what) + ": expected a pair [i, j]");
    }
    return {get_int(j[0], what), get_int(j[1], what)};
}

} // namespace

QuiverDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("document: expected a JSON object");
    if (!j.contains("n") || !j.contains("arcs")) {
        throw input_error("document: fields \"n\" and \"arcs\" are required");
    }

    const int n = get_int(j["n"], "document n");
    if (!j["arcs"].is_array()) throw input_error("document arcs: expected an array");
    std::vector<Arc> arcs;
    for (const auto& item : j["arcs"]) arcs.push_back(get_pair(item, "document arc"));

    QuiverDocument doc{Quiver(n, std::move(arcs))};
    if (!is_acyclic(doc.quiver)) throw input_error("document arcs: quiver must be acyclic");

    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n) {
            throw input_error("document labels: expected one display name per vertex");
        }
        for (const auto& item : j["labels"]) {
            if (!item.is_string()) throw input_error("document labels: expected strings");
            doc.labels.push_back(item.get<std::string>());
        }
    }

    if (j.contains("rotation")) {
        const auto& rot = j["rotation"];
        const size_t sz = rot.is_array() ? rot.size() : 0;
        if (sz != static_cast<size_t>(n) && sz != static_cast<size_t>(n) + 2) {
            throw input_error("document rotation: expected n or n+2 neighbor lists");
        }
        RotationSystem rs;
        for (const auto& ring : rot) {
            if (!ring.is_array()) throw input_error("document rotation: expected lists");
            std::vector<int> order;
            for (const auto& item : ring) order.push_back(get_int(item, "document rotation"));
            rs.order.push_back(std::move(order));
        }
        doc.rotation = std::move(rs);
    }

    if (j.contains("outer")) {
        if (!doc.rotation) throw input_error("document outer: requires a rotation");
        doc.outer = get_pair(j["outer"], "document outer");
    }

    if (j.contains("regions")) {
        if (!j["regions"].is_array()) throw input_error("document regions: expected an array");
        for (const auto& item : j["regions"]) {
            if (!item.is_object() || !item.contains("delta") || !item.contains("min") ||
                !item.contains("max")) {
                throw input_error("document region: expected {delta, min, max}");
            }
            BoundedRegion region;
            for (const auto& v : item["delta"]) {
                region.delta.push_back(get_int(v, "document region delta"));
            }
            if (region.delta.empty()) throw input_error("document region: empty delta");
            region.min_v = get_int(item["min"], "document region min");
            region.max_v = get_int(item["max"], "document region max");
            doc.regions.push_back(std::move(region));
        }
    }

    return doc;
}

std::string serialize_document(const QuiverDocument& doc) {
    json j;
    j["n"] = doc.quiver.vertex_count();
    auto arcs = json::array();
    for (const auto& [a, b] : doc.quiver.arcs()) arcs.push_back(json::array({a, b}));
    j["arcs"] = std::move(arcs);
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    if (doc.rotation) {
        auto rot = json::array();
        for (const auto& ring : doc.rotation->order) rot.push_back(ring);
        j["rotation"] = std::move(rot);
    }
    if (doc.outer) j["outer"] = json::array({doc.outer->first, doc.outer->second});
    if (!doc.regions.empty()) {
        auto regions = json::array();
        for (const auto& region : doc.regions) {
            json r;
            r["delta"] = region.delta;
            r["min"] = region.min_v;
            r["max"] = region.max_v;
            regions.push_back(std::move(r));
        }
        j["regions"] = std::move(regions);
    }
    return j.dump(2) + "\n";
}

QuiverDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str());
}

void save_document(const QuiverDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path.string());
    out << serialize_document(doc);
}

} // namespace toric
