#ifndef DIGHOM_IO_HPP
#define DIGHOM_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "dighom/core.hpp"
#include "dighom/maps.hpp"

namespace dighom {

// Image documents are JSON objects with keys "n", "u" and "points", plus an
// optional "name" and an optional "edges" list of point pairs that switches
// the image to explicit adjacency. Duplicate points are dropped with a
// warning rather than rejected.
DigitalImage parse_image(const std::string& text, std::vector<std::string>* warnings = nullptr);
DigitalImage load_image(const std::filesystem::path& file,
                        std::vector<std::string>* warnings = nullptr);

// Map documents name their endpoint documents ("domain", "codomain", paths
// resolved relative to the map file) and give the graph as a "pairs" list
// of [x, f(x)] point pairs, which must cover the domain exactly once.
DigitalMap load_map(const std::filesystem::path& file,
                    std::vector<std::string>* warnings = nullptr);

// Path documents carry an "image" reference (file name or inline object)
// and a "values" list of points visited at parameters 0..m.
DigitalPath load_path(const std::filesystem::path& file,
                      std::vector<std::string>* warnings = nullptr);

// Inverse of parse_image, with keys emitted in a fixed order so equal
// images serialize to identical text.
std::string image_to_json(const DigitalImage& image, const std::string& name = "");

// A bare point literal like "[0,1]", used for command-line arguments.
LatticePoint parse_point_text(const std::string& text);

}  // namespace dighom

#endif
