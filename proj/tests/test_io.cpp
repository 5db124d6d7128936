#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dighom/corpus.hpp"
#include "dighom/io.hpp"
#include "doctest.h"

using namespace dighom;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static fs::path dir = [] {
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        fs::path p = fs::temp_directory_path() / ("dighom_io_" + std::to_string(stamp));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    out.close();
    return p;
}

std::string thrown_message(const std::function<void()>& call) {
    try {
        call();
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("an image document parses to the image it describes") {
    DigitalImage parsed =
        parse_image(R"({"n":2,"u":1,"points":[[0,0],[1,0],[1,1],[0,1]]})");
    CHECK(parsed == square4());
    CHECK_FALSE(parsed.explicit_adjacency());

    // Order in the document does not matter; the image is canonical.
    DigitalImage shuffled =
        parse_image(R"({"n":2,"u":1,"points":[[1,1],[0,0],[0,1],[1,0]]})");
    CHECK(shuffled == parsed);

    // A name is allowed and ignored by the image itself.
    CHECK(parse_image(R"({"name":"sq","n":2,"u":1,"points":[[0,0]]})").size() == 1);
}

TEST_CASE("duplicate points are dropped with a warning") {
    std::vector<std::string> warnings;
    DigitalImage parsed = parse_image(
        R"({"n":1,"u":1,"points":[[0],[1],[0],[0]]})", &warnings);
    CHECK(parsed.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("dropped 2 duplicate point(s)") != std::string::npos);

    warnings.clear();
    parse_image(R"({"n":1,"u":1,"points":[[0],[1]]})", &warnings);
    CHECK(warnings.empty());
}

TEST_CASE("bad image documents are rejected with a reason") {
    CHECK(thrown_message([] { parse_image(R"({"n":2,"u":3,"points":[]})"); })
              .find("\"u\" must satisfy 1 <= u <= n") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"({"n":0,"u":1,"points":[]})"); })
              .find("\"n\" out of range") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"({"u":1,"points":[]})"); })
              .find("missing \"n\"") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"({"n":2,"u":1})"); })
              .find("missing \"points\" array") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"({"n":2,"u":1,"points":[[0,0,0]]})"); })
              .find("array of 2 integers") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"({"n":2,"u":1,"points":[[0,1.5]]})"); })
              .find("coordinates must be integers") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"({"n":2.5,"u":1,"points":[]})"); })
              .find("\"n\" must be an integer") != std::string::npos);
    CHECK(thrown_message([] { parse_image(R"([1,2,3])"); })
              .find("must be a JSON object") != std::string::npos);
}

TEST_CASE("malformed syntax reports the offending line") {
    std::string text = "{\n  \"n\": 2,\n  BAD\n}";
    CHECK(thrown_message([&] { parse_image(text); }).find("malformed document near line 3") !=
          std::string::npos);
}

TEST_CASE("an edges list switches the image to explicit adjacency") {
    DigitalImage parsed = parse_image(
        R"({"n":1,"u":1,"points":[[0],[1],[2]],"edges":[[[0],[1]]]})");
    CHECK(parsed.explicit_adjacency());
    CHECK(parsed.adjacent_in(0, 1));
    CHECK_FALSE(parsed.adjacent_in(1, 2));  // present under the lattice rule, not listed

    CHECK_THROWS_AS(
        parse_image(R"({"n":1,"u":1,"points":[[0],[1]],"edges":[[[0],[7]]]})"),
        std::invalid_argument);
    CHECK(thrown_message([] {
              parse_image(R"({"n":1,"u":1,"points":[[0],[1]],"edges":[[[0]]]})");
          }).find("each edge must be a pair of points") != std::string::npos);
}

TEST_CASE("serialization is canonical and round-trips") {
    CHECK(image_to_json(square4()) ==
          R"({"n":2,"u":1,"points":[[0,0],[0,1],[1,0],[1,1]]})");
    CHECK(image_to_json(square4(), "sq") ==
          R"({"name":"sq","n":2,"u":1,"points":[[0,0],[0,1],[1,0],[1,1]]})");

    for (const auto& image : image_corpus(901, 10, 8, 3)) {
        std::string text = image_to_json(image);
        DigitalImage back = parse_image(text);
        CHECK(back == image);
        CHECK(image_to_json(back) == text);
    }

    // Explicit adjacency survives the trip, edges included.
    DigitalImage cyl = cartesian_product(square4(), digital_interval(0, 2));
    DigitalImage back = parse_image(image_to_json(cyl));
    CHECK(back == cyl);
    CHECK(back.explicit_adjacency());
    CHECK(back.edge_count() == cyl.edge_count());
}

TEST_CASE("map documents resolve their endpoints and cover the domain") {
    write_file("codomain.json", R"({"n":1,"u":1,"points":[[0],[1],[2]]})");
    fs::path map_file = write_file("map.json", R"({
        "domain": {"n":2,"u":1,"points":[[0,0],[0,1],[1,0],[1,1]]},
        "codomain": "codomain.json",
        "pairs": [[[0,0],[0]], [[0,1],[1]], [[1,0],[1]], [[1,1],[2]]]
    })");
    DigitalMap f = load_map(map_file);
    CHECK(f.domain() == square4());
    CHECK(f.codomain() == digital_interval(0, 2));
    CHECK(f.apply({0, 0}) == LatticePoint{0});
    CHECK(f.apply({1, 1}) == LatticePoint{2});
    CHECK(is_continuous(f));

    fs::path partial = write_file("partial.json", R"({
        "domain": {"n":1,"u":1,"points":[[0],[1]]},
        "codomain": {"n":1,"u":1,"points":[[0]]},
        "pairs": [[[0],[0]]]
    })");
    CHECK(thrown_message([&] { load_map(partial); }).find("map document") != std::string::npos);

    fs::path conflict = write_file("conflict.json", R"({
        "domain": {"n":1,"u":1,"points":[[0],[1]]},
        "codomain": {"n":1,"u":1,"points":[[0],[1]]},
        "pairs": [[[0],[0]], [[0],[1]], [[1],[0]]]
    })");
    CHECK(thrown_message([&] { load_map(conflict); })
              .find("assigns two values") != std::string::npos);

    fs::path missing = write_file("missing.json", R"({"domain": {"n":1,"u":1,"points":[[0]]}})");
    CHECK(thrown_message([&] { load_map(missing); })
              .find("missing \"domain\" or \"codomain\"") != std::string::npos);

    fs::path absent = write_file("absent.json", R"({
        "domain": "never_written.json",
        "codomain": {"n":1,"u":1,"points":[[0]]},
        "pairs": []
    })");
    CHECK(thrown_message([&] { load_map(absent); }).find("cannot open") != std::string::npos);
}

TEST_CASE("path documents produce paths over their image") {
    fs::path loop_file = write_file("loop.json", R"({
        "image": {"n":2,"u":1,"points":[[0,0],[0,1],[1,0],[1,1]]},
        "values": [[0,0],[1,0],[1,1],[0,1],[0,0]]
    })");
    DigitalPath loop = load_path(loop_file);
    CHECK(loop.m() == 4);
    CHECK(loop.is_loop());
    CHECK(loop.target == square4());

    fs::path torn = write_file("torn.json", R"({
        "image": {"n":2,"u":1,"points":[[0,0],[0,1],[1,0],[1,1]]},
        "values": [[0,0],[1,1]]
    })");
    CHECK(thrown_message([&] { load_path(torn); }).find("path document") != std::string::npos);

    fs::path no_values = write_file("no_values.json", R"({
        "image": {"n":1,"u":1,"points":[[0]]}
    })");
    CHECK(thrown_message([&] { load_path(no_values); })
              .find("missing \"values\" array") != std::string::npos);
}

TEST_CASE("image files load like inline documents") {
    fs::path f = write_file("square.json", image_to_json(square4()));
    CHECK(load_image(f) == square4());
    CHECK_THROWS_AS(load_image(scratch_dir() / "nope.json"), std::invalid_argument);
}

TEST_CASE("point literals") {
    CHECK(parse_point_text("[0,1]") == LatticePoint{0, 1});
    CHECK(parse_point_text("[-3]") == LatticePoint{-3});
    CHECK_THROWS_AS(parse_point_text("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point_text("[1.5]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point_text("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point_text("{\"x\":1}"), std::invalid_argument);
}
