#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dighom/chains.hpp"
#include "dighom/core.hpp"
#include "dighom/corpus.hpp"
#include "dighom/homology.hpp"
#include "dighom/io.hpp"
#include "dighom/maps.hpp"
#include "dighom/simplicial.hpp"

namespace {

using namespace dighom;

std::size_t state_cap_from_env() {
    const char* raw = std::getenv("DIGHOM_STATE_CAP");
    if (!raw) return kDefaultStateCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        throw std::invalid_argument("DIGHOM_STATE_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string format_path_points(const DigitalPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        if (i) out += ' ';
        out += format_point(p.target.point(p.values[i]));
    }
    return out;
}

int run_info(const std::string& file) {
    std::vector<std::string> warnings;
    DigitalImage image = load_image(file, &warnings);
    print_warnings(warnings);
    std::cout << "points: " << image.size() << "\n";
    std::cout << "ambient dimension: " << image.spec().n << "\n";
    if (image.explicit_adjacency())
        std::cout << "adjacency: explicit edge table\n";
    else
        std::cout << "adjacency: k(" << image.spec().u << "," << image.spec().n << "), "
                  << neighbor_count(image.spec()) << " neighbors per lattice point\n";
    std::cout << "edges: " << image.edge_count() << "\n";
    std::cout << "components: " << connected_components(image).size() << "\n";
    return 0;
}

int run_components(const std::string& file) {
    std::vector<std::string> warnings;
    DigitalImage image = load_image(file, &warnings);
    print_warnings(warnings);
    auto components = connected_components(image);
    std::cout << "components: " << components.size() << "\n";
    for (std::size_t c = 0; c < components.size(); ++c) {
        std::cout << "component " << c << ":";
        for (int i : components[c]) std::cout << " " << format_point(image.point(i));
        std::cout << "\n";
    }
    return 0;
}

int run_homology(const std::string& file, int max_dim, bool dump) {
    if (max_dim < 0 || max_dim > kMaxChainDimension - 1)
        throw std::invalid_argument("--max-dim must be between 0 and " +
                                    std::to_string(kMaxChainDimension - 1));
    std::vector<std::string> warnings;
    DigitalImage image = load_image(file, &warnings);
    print_warnings(warnings);
    for (int n = 0; n <= max_dim; ++n)
        std::cout << format_homology_line(n, homology(image, n)) << "\n";
    if (dump)
        for (int n = 0; n <= max_dim + 1; ++n)
            std::cout << matrix_triplet_text("boundary_" + std::to_string(n),
                                             boundary_matrix(image, n));
    return 0;
}

int run_check_map(const std::string& file) {
    std::vector<std::string> warnings;
    DigitalMap map = load_map(file, &warnings);
    print_warnings(warnings);
    std::cout << "domain points: " << map.domain().size() << "\n";
    std::cout << "codomain points: " << map.codomain().size() << "\n";
    bool continuous = is_continuous(map);
    std::cout << "continuous: " << (continuous ? "yes" : "no") << "\n";
    std::cout << "bijective: " << (map.is_bijective() ? "yes" : "no") << "\n";
    return continuous ? 0 : 1;
}

int run_induced(const std::string& file, int dim) {
    if (dim < 0 || dim > kMaxChainDimension - 1)
        throw std::invalid_argument("--dim must be between 0 and " +
                                    std::to_string(kMaxChainDimension - 1));
    std::vector<std::string> warnings;
    DigitalMap map = load_map(file, &warnings);
    print_warnings(warnings);
    if (!is_continuous(map)) {
        std::cout << "map is not continuous; no induced map\n";
        return 1;
    }
    std::cout << "domain " << format_homology_line(dim, homology(map.domain(), dim)) << "\n";
    std::cout << "codomain " << format_homology_line(dim, homology(map.codomain(), dim)) << "\n";
    IntMatrix m = induced_homology_map(map, dim);
    std::cout << "matrix (" << m.rows() << " x " << m.cols() << "):\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " ";
            std::cout << m(i, j).get_str();
        }
        std::cout << "\n";
    }
    return 0;
}

void print_homotopy_witness(const Homotopy& witness) {
    std::cout << "length: " << witness.m() << "\n";
    std::cout << "domain order:";
    for (const auto& p : witness.source.points()) std::cout << " " << format_point(p);
    std::cout << "\n";
    for (int t = 0; t <= witness.m(); ++t) {
        std::cout << "frame " << t << ":";
        for (int v : witness.frames[static_cast<std::size_t>(t)])
            std::cout << " " << format_point(witness.target.point(v));
        std::cout << "\n";
    }
}

int run_homotopy(const std::string& file_f, const std::string& file_g, bool pointed,
                 const std::string& base_text) {
    std::vector<std::string> warnings;
    DigitalMap f = load_map(file_f, &warnings);
    DigitalMap g = load_map(file_g, &warnings);
    print_warnings(warnings);
    std::size_t cap = state_cap_from_env();
    HomotopyResult result;
    if (pointed) {
        if (base_text.empty())
            throw std::invalid_argument("--pointed requires --base with a point literal");
        LatticePoint x0 = parse_point_text(base_text);
        result = are_pointed_homotopic(f, g, x0, f.apply(x0), cap);
    } else {
        result = are_homotopic(f, g, cap);
    }
    switch (result.outcome) {
        case HomotopyOutcome::kFound:
            std::cout << "homotopic: yes\n";
            print_homotopy_witness(*result.witness);
            return 0;
        case HomotopyOutcome::kNotHomotopic:
            std::cout << "homotopic: no\n";
            return 1;
        case HomotopyOutcome::kCapExceeded:
            std::cout << "homotopic: undetermined, state cap of " << cap
                      << " exceeded; raise DIGHOM_STATE_CAP to search further\n";
            return 1;
    }
    return 2;
}

int run_loops_equal(const std::string& file_f, const std::string& file_g, int bound) {
    if (bound < 1) throw std::invalid_argument("--bound must be positive");
    std::vector<std::string> warnings;
    DigitalPath f = load_path(file_f, &warnings);
    DigitalPath g = load_path(file_g, &warnings);
    print_warnings(warnings);
    std::size_t cap = state_cap_from_env();
    LoopsEqualDetail detail = loops_equivalent_detail(f, g, bound, cap);
    if (detail.equivalent) {
        std::cout << "loops equivalent: yes\n";
        std::cout << "common length: " << detail.common_length << "\n";
        return 0;
    }
    if (detail.cap_hit) {
        std::cout << "loops equivalent: undetermined, state cap of " << cap
                  << " exceeded within bound " << bound << "\n";
        return 1;
    }
    std::cout << "loops equivalent: not within length bound " << bound << "\n";
    return 1;
}

int run_verify(const std::string& corpus_kind, std::uint64_t seed) {
    if (corpus_kind != "random")
        throw std::invalid_argument("unknown corpus kind \"" + corpus_kind + "\"");
    int failures = 0;
    auto check = [&failures](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    check("face maps compose consistently up to dimension 4", verify_face_identity(4));

    bool point_groups = true;
    for (int ambient = 1; ambient <= 3; ++ambient) {
        DigitalImage point = one_point(ambient);
        point_groups = point_groups && homology(point, 0) == HomologyGroup{1, {}};
        for (int n = 1; n <= 3; ++n)
            point_groups = point_groups && homology(point, n) == HomologyGroup{0, {}};
    }
    check("one-point images have a single free class in degree zero", point_groups);

    std::vector<DigitalImage> images = image_corpus(seed, 10, 8, 3);
    bool dd_zero = true;
    for (const auto& image : images)
        for (int n = 1; n <= 3; ++n) dd_zero = dd_zero && verify_dd_zero(image, n);
    check("boundary applied twice vanishes on the corpus", dd_zero);

    std::mt19937_64 rng(seed);
    bool commutes = true;
    bool functorial = true;
    for (int trial = 0; trial < 8; ++trial) {
        const DigitalImage& x = images[trial % images.size()];
        const DigitalImage& y = images[(trial + 3) % images.size()];
        const DigitalImage& z = images[(trial + 5) % images.size()];
        if (y.empty() || z.empty()) continue;
        DigitalMap f = random_continuous_map(rng, x, y);
        DigitalMap g = random_continuous_map(rng, y, z);
        for (int n = 1; n <= 2; ++n) commutes = commutes && verify_chain_commutes(f, n);
        functorial = functorial && verify_functoriality(f, g, 1);
    }
    check("chain maps commute with the boundary", commutes);
    check("composition and identity pass to induced maps", functorial);

    bool inclusions = true;
    for (const auto& image : images) {
        if (image.size() < 2) continue;
        std::vector<LatticePoint> kept(image.points().begin(), image.points().end() - 1);
        DigitalImage part(image.spec(), std::move(kept));
        inclusions = inclusions && verify_inclusion_injective(part, image, 1);
    }
    check("inclusions act injectively on chains", inclusions);

    if (failures == 0) {
        std::cout << "verified: all checks passed\n";
        return 0;
    }
    std::cout << "verification failed: " << failures << " check(s)\n";
    return 1;
}

int run_hurewicz_demo() {
    HurewiczReport report = hurewicz_counterexample();
    std::cout << "image: unit square corners, " << format_homology_line(1, report.square_h1)
              << "\n";
    std::cout << "loop f: " << format_path_points(report.f) << "\n";
    std::cout << "loop g: " << format_path_points(report.g) << "\n";
    auto verdict = [](bool v) { return v ? "yes" : "no"; };
    std::cout << "unit loop times f equals g pointwise: " << verdict(report.product_matches)
              << "\n";
    std::cout << "f and g lie in the same based class: " << verdict(report.loops_same_class)
              << "\n";
    std::cout << "first-step chains of f and g differ: " << verdict(report.chains_differ) << "\n";
    bool all = report.product_matches && report.loops_same_class && report.chains_differ;
    std::cout << (all ? "demonstrated: the first-step chain is not determined by the class\n"
                      : "demonstration failed\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homology and homotopy computations for digital images"};
    app.require_subcommand(1);

    std::string image_file, map_file, file_f, file_g, base_text, corpus_kind = "random";
    int max_dim = 2, dim = 1, bound = 8;
    bool dump = false, pointed = false;
    std::uint64_t seed = 1;

    CLI::App* info = app.add_subcommand("info", "Summarize an image document");
    info->add_option("image", image_file, "image JSON file")->required();

    CLI::App* components = app.add_subcommand("components", "List connected components");
    components->add_option("image", image_file, "image JSON file")->required();

    CLI::App* homology_cmd = app.add_subcommand("homology", "Homology groups of an image");
    homology_cmd->add_option("image", image_file, "image JSON file")->required();
    homology_cmd->add_option("--max-dim", max_dim, "largest dimension to report");
    homology_cmd->add_flag("--dump-matrices", dump, "print boundary matrices as triplets");

    CLI::App* check_map = app.add_subcommand("check-map", "Validate a map document");
    check_map->add_option("map", map_file, "map JSON file")->required();

    CLI::App* induced = app.add_subcommand("induced", "Induced map on homology");
    induced->add_option("map", map_file, "map JSON file")->required();
    induced->add_option("--dim", dim, "homology dimension");

    CLI::App* homotopy_cmd = app.add_subcommand("homotopy", "Decide homotopy of two maps");
    homotopy_cmd->add_option("f", file_f, "first map JSON file")->required();
    homotopy_cmd->add_option("g", file_g, "second map JSON file")->required();
    homotopy_cmd->add_flag("--pointed", pointed, "fix a base point throughout");
    homotopy_cmd->add_option("--base", base_text, "base point literal, e.g. [0,0]");

    CLI::App* loops = app.add_subcommand("loops-equal", "Decide based loop equivalence");
    loops->add_option("f", file_f, "first path JSON file")->required();
    loops->add_option("g", file_g, "second path JSON file")->required();
    loops->add_option("--bound", bound, "largest common extension length tried");

    CLI::App* verify = app.add_subcommand("verify", "Run the theorem suite on a seeded corpus");
    verify->add_option("--corpus", corpus_kind, "corpus kind (random)");
    verify->add_option("--seed", seed, "random seed");

    app.add_subcommand("hurewicz-demo",
                       "Loops in one based class whose first-step chains differ");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }

    try {
        if (info->parsed()) return run_info(image_file);
        if (components->parsed()) return run_components(image_file);
        if (homology_cmd->parsed()) return run_homology(image_file, max_dim, dump);
        if (check_map->parsed()) return run_check_map(map_file);
        if (induced->parsed()) return run_induced(map_file, dim);
        if (homotopy_cmd->parsed()) return run_homotopy(file_f, file_g, pointed, base_text);
        if (loops->parsed()) return run_loops_equal(file_f, file_g, bound);
        if (verify->parsed()) return run_verify(corpus_kind, seed);
        return run_hurewicz_demo();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
