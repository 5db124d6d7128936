#include "dighom/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dighom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

int line_of(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

json parse_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(where, "malformed document near line " + std::to_string(line_of(text, e.byte)) +
                        " (" + e.what() + ")");
    }
}

long long int_field(const json& j, const std::string& where, const std::string& key) {
    if (!j.contains(key)) fail(where, "missing \"" + key + "\"");
    if (!j[key].is_number_integer()) fail(where, "\"" + key + "\" must be an integer");
    return j[key].get<long long>();
}

LatticePoint point_from(const json& j, const std::string& where, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        fail(where, "a point must be an array of " + std::to_string(n) + " integers");
    LatticePoint p;
    p.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_number_integer()) fail(where, "point coordinates must be integers");
        p.push_back(c.get<Coord>());
    }
    return p;
}

DigitalImage image_from(const json& doc, const std::string& where,
                        std::vector<std::string>* warnings) {
    if (!doc.is_object()) fail(where, "an image document must be a JSON object");
    long long n = int_field(doc, where, "n");
    long long u = int_field(doc, where, "u");
    if (n < 1 || n > 64) fail(where, "\"n\" out of range");
    if (u < 1 || u > n) fail(where, "\"u\" must satisfy 1 <= u <= n");
    if (!doc.contains("points") || !doc["points"].is_array())
        fail(where, "missing \"points\" array");

    std::vector<LatticePoint> points;
    std::set<LatticePoint> seen;
    int dropped = 0;
    for (const auto& entry : doc["points"]) {
        LatticePoint p = point_from(entry, where + ", points", static_cast<int>(n));
        if (seen.insert(p).second)
            points.push_back(std::move(p));
        else
            ++dropped;
    }
    if (dropped > 0 && warnings)
        warnings->push_back(where + ": dropped " + std::to_string(dropped) +
                            " duplicate point(s)");

    AdjacencySpec spec{static_cast<int>(n), static_cast<int>(u)};
    if (!doc.contains("edges")) return DigitalImage(spec, std::move(points));

    if (!doc["edges"].is_array()) fail(where, "\"edges\" must be an array of point pairs");
    std::vector<std::pair<LatticePoint, LatticePoint>> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2)
            fail(where + ", edges", "each edge must be a pair of points");
        edges.emplace_back(point_from(entry[0], where + ", edges", static_cast<int>(n)),
                           point_from(entry[1], where + ", edges", static_cast<int>(n)));
    }
    return DigitalImage(spec, std::move(points), std::move(edges));
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// An image reference inside another document: either a file name resolved
// next to the referring document, or an inline image object.
DigitalImage image_reference(const json& ref, const std::filesystem::path& base,
                             const std::string& where, std::vector<std::string>* warnings) {
    if (ref.is_string()) {
        std::filesystem::path p = ref.get<std::string>();
        if (p.is_relative()) p = base / p;
        return load_image(p, warnings);
    }
    if (ref.is_object()) return image_from(ref, where, warnings);
    fail(where, "expected a file name or an inline image object");
}

}  // namespace

DigitalImage parse_image(const std::string& text, std::vector<std::string>* warnings) {
    return image_from(parse_text(text, "image document"), "image document", warnings);
}

DigitalImage load_image(const std::filesystem::path& file, std::vector<std::string>* warnings) {
    std::string where = "image document " + file.string();
    return image_from(parse_text(read_file(file), where), where, warnings);
}

DigitalMap load_map(const std::filesystem::path& file, std::vector<std::string>* warnings) {
    std::string where = "map document " + file.string();
    json doc = parse_text(read_file(file), where);
    if (!doc.is_object()) fail(where, "a map document must be a JSON object");
    if (!doc.contains("domain") || !doc.contains("codomain"))
        fail(where, "missing \"domain\" or \"codomain\"");
    std::filesystem::path base = file.parent_path();
    DigitalImage domain = image_reference(doc["domain"], base, where + ", domain", warnings);
    DigitalImage codomain = image_reference(doc["codomain"], base, where + ", codomain", warnings);
    if (!doc.contains("pairs") || !doc["pairs"].is_array())
        fail(where, "missing \"pairs\" array");
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
    for (const auto& entry : doc["pairs"]) {
        if (!entry.is_array() || entry.size() != 2)
            fail(where + ", pairs", "each pair must be [x, f(x)]");
        pairs.emplace_back(point_from(entry[0], where + ", pairs", domain.spec().n),
                           point_from(entry[1], where + ", pairs", codomain.spec().n));
    }
    try {
        return DigitalMap::from_pairs(std::move(domain), std::move(codomain), pairs);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

DigitalPath load_path(const std::filesystem::path& file, std::vector<std::string>* warnings) {
    std::string where = "path document " + file.string();
    json doc = parse_text(read_file(file), where);
    if (!doc.is_object()) fail(where, "a path document must be a JSON object");
    if (!doc.contains("image")) fail(where, "missing \"image\"");
    DigitalImage image =
        image_reference(doc["image"], file.parent_path(), where + ", image", warnings);
    if (!doc.contains("values") || !doc["values"].is_array())
        fail(where, "missing \"values\" array");
    std::vector<LatticePoint> values;
    for (const auto& entry : doc["values"])
        values.push_back(point_from(entry, where + ", values", image.spec().n));
    try {
        return DigitalPath::from_points(std::move(image), values);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

std::string image_to_json(const DigitalImage& image, const std::string& name) {
    nlohmann::ordered_json doc;
    if (!name.empty()) doc["name"] = name;
    doc["n"] = image.spec().n;
    doc["u"] = image.spec().u;
    doc["points"] = nlohmann::ordered_json::array();
    for (const auto& p : image.points()) doc["points"].push_back(p);
    if (image.explicit_adjacency()) {
        doc["edges"] = nlohmann::ordered_json::array();
        for (int i = 0; i < image.size(); ++i)
            for (int j : image.neighbors_of(i))
                if (j > i) doc["edges"].push_back({image.point(i), image.point(j)});
    }
    return doc.dump();
}

LatticePoint parse_point_text(const std::string& text) {
    json j = parse_text(text, "point literal");
    if (!j.is_array() || j.empty()) throw std::invalid_argument("point literal: expected [c1,...]");
    LatticePoint p;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw std::invalid_argument("point literal: coordinates must be integers");
        p.push_back(c.get<Coord>());
    }
    return p;
}

}  // namespace dighom
