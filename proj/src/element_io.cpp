#include "hexmass/element_io.hpp"

#include <fstream>

#include <json.hpp>

#include "hexmass/mass.hpp"

namespace hexmass {

namespace {

using nlohmann::json;

NodalDensities parse_densities(const json& arr, const std::string& id) {
    if (!arr.is_array() || arr.size() != 8) {
        throw StructuralError("element '" + id + "': densities must be an array of 8 numbers");
    }
    NodalDensities d;
    for (int i = 0; i < 8; ++i) {
        if (!arr[i].is_number()) {
            throw ParseError("element '" + id + "': density " + std::to_string(i + 1) +
                             " is not a number");
        }
        d.rho[i] = arr[i].get<double>();
        if (d.rho[i] <= 0.0) {
            throw ValidityError("element '" + id + "': density " + std::to_string(i + 1) +
                                " is not strictly positive");
        }
    }
    return d;
}

ElementRecord parse_record(const json& obj) {
    if (!obj.is_object()) {
        throw StructuralError("element entry is not a JSON object");
    }
    ElementRecord rec;
    rec.id = obj.value("id", std::string{});
    if (!obj.contains("nodes")) {
        throw StructuralError("element '" + rec.id + "': missing \"nodes\"");
    }
    const json& nodes = obj["nodes"];
    if (!nodes.is_array() || nodes.size() != 8) {
        throw StructuralError("element '" + rec.id + "': expected 8 nodes, got " +
                              std::to_string(nodes.is_array() ? nodes.size() : 0));
    }
    for (int i = 0; i < 8; ++i) {
        const json& node = nodes[i];
        if (!node.is_array() || node.size() != 3) {
            throw StructuralError("element '" + rec.id + "': node " + std::to_string(i + 1) +
                                  " must have 3 components");
        }
        for (int k = 0; k < 3; ++k) {
            if (!node[k].is_number()) {
                throw ParseError("element '" + rec.id + "': node " + std::to_string(i + 1) +
                                 " component " + std::to_string(k + 1) + " is not a number");
            }
            rec.geometry.nodes[i][k] = node[k].get<double>();
        }
    }
    rec.densities = obj.contains("densities") ? parse_densities(obj["densities"], rec.id)
                                              : default_densities();
    if (centroid_metric(rec.geometry) <= 0.0) {
        throw ValidityError("element '" + rec.id + "': non-positive centroid metric (inverted)");
    }
    return rec;
}

json to_json(const ElementRecord& rec) {
    json obj;
    obj["id"] = rec.id;
    json nodes = json::array();
    for (const auto& n : rec.geometry.nodes) {
        nodes.push_back({n[0], n[1], n[2]});
    }
    obj["nodes"] = std::move(nodes);
    obj["densities"] = rec.densities.rho;
    return obj;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

NodalDensities default_densities() {
    return NodalDensities{{1.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0}};
}

ElementRecord read_element(const std::string& path) {
    const json doc = load_file(path);
    if (doc.is_array()) {
        if (doc.size() != 1) {
            throw StructuralError(path + ": expected a single element, found " +
                                  std::to_string(doc.size()));
        }
        return parse_record(doc[0]);
    }
    return parse_record(doc);
}

std::vector<ElementRecord> read_elements(const std::string& path) {
    const json doc = load_file(path);
    std::vector<ElementRecord> out;
    if (doc.is_array()) {
        out.reserve(doc.size());
        for (const auto& entry : doc) {
            out.push_back(parse_record(entry));
        }
    } else {
        out.push_back(parse_record(doc));
    }
    return out;
}

void write_element(const ElementRecord& rec, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    out << to_json(rec).dump(2) << '\n';
}

void write_elements(const std::vector<ElementRecord>& recs, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : recs) {
        arr.push_back(to_json(rec));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace hexmass
