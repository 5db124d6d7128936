#ifndef DIGHOM_MAPS_HPP
#define DIGHOM_MAPS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dighom/core.hpp"

namespace dighom {

// A function between two digital images, stored as an explicit table:
// entry i is the codomain index of the value at domain point i.
class DigitalMap {
  public:
    DigitalMap() = default;
    DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> table);

    static DigitalMap from_pairs(DigitalImage domain, DigitalImage codomain,
                                 const std::vector<std::pair<LatticePoint, LatticePoint>>& pairs);
    static DigitalMap identity(const DigitalImage& image);
    static DigitalMap constant(const DigitalImage& domain, const DigitalImage& codomain,
                               const LatticePoint& value);

    const DigitalImage& domain() const { return domain_; }
    const DigitalImage& codomain() const { return codomain_; }
    const std::vector<int>& table() const { return table_; }
    int value_index(int i) const { return table_[static_cast<std::size_t>(i)]; }
    LatticePoint apply(const LatticePoint& p) const;
    bool is_bijective() const;

    friend bool operator==(const DigitalMap& a, const DigitalMap& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.table_ == b.table_;
    }

  private:
    DigitalImage domain_;
    DigitalImage codomain_;
    std::vector<int> table_;
};

// Adjacent points must land on equal or adjacent values. The pairwise form
// is the workhorse; the subset form re-derives the same predicate from the
// connectedness-preservation definition and exists as an independent
// cross-check (exponential, small inputs only).
bool is_continuous(const DigitalMap& f);
bool is_continuous_by_subsets(const DigitalMap& f);

DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

// True iff f is a continuous bijection and g its continuous two-sided
// inverse.
bool verify_homeomorphism(const DigitalMap& f, const DigitalMap& g);

// A path of length m in an image: values at 0..m, consecutive entries
// equal or adjacent. Stored as indices into the target's point order.
struct DigitalPath {
    DigitalImage target;
    std::vector<int> values;

    int m() const { return static_cast<int>(values.size()) - 1; }
    bool is_loop() const { return values.front() == values.back(); }
    int base_index() const { return values.front(); }

    static DigitalPath from_points(DigitalImage target, const std::vector<LatticePoint>& pts);
    static DigitalPath constant_loop(DigitalImage target, const LatticePoint& at, int m = 1);
    // The same path as a map out of the interval [0,m].
    DigitalMap as_map() const;

    friend bool operator==(const DigitalPath&, const DigitalPath&) = default;
};

// Concatenation: f followed by g, defined when f ends where g starts.
DigitalPath path_product(const DigitalPath& f, const DigitalPath& g);

// Whether g arises from f by inserting constant stretches, i.e. whether
// g's value sequence is a run-length expansion of f's: some nondecreasing
// surjective unit-step reindexing r has g = f after r. Decided by a
// dynamic program over the two sequences.
bool is_trivial_extension(const DigitalPath& f, const DigitalPath& g);

// All run-length expansions of the path to exactly the given length,
// deduplicated and sorted.
std::vector<std::vector<int>> trivial_extensions_of_length(const DigitalPath& f, int len);

// The cartesian product of an image with an interval: points (x,t), edges
// between equal-t layers following the image and between consecutive
// layers at fixed x. The result carries an explicit edge table since this
// adjacency is generally outside the k(u,n) family.
DigitalImage cartesian_product(const DigitalImage& image, const DigitalImage& interval);

// The slice inclusion x -> (x,i) into the cartesian product, for i one of
// the interval's endpoints.
DigitalMap psi(const DigitalImage& image, const DigitalImage& interval, Coord i);

// A homotopy of length m: frames 0..m, each a continuous map given by its
// table, with every point's track moving by at most one adjacency step
// per frame.
struct Homotopy {
    DigitalImage source;
    DigitalImage target;
    std::vector<std::vector<int>> frames;

    int m() const { return static_cast<int>(frames.size()) - 1; }
    DigitalMap frame(int t) const;
};

bool is_homotopy_valid(const Homotopy& F, const DigitalMap& f, const DigitalMap& g);
bool is_pointed_homotopy_valid(const Homotopy& F, const DigitalMap& f, const DigitalMap& g,
                               const LatticePoint& x0, const LatticePoint& y0);

// A homotopy run backwards, and two homotopies joined end to start; with
// the lazy single-step witness these exhibit homotopy as an equivalence.
Homotopy reverse_homotopy(const Homotopy& F);
Homotopy concatenate_homotopy(const Homotopy& F, const Homotopy& G);

// The homotopy decision walks the graph whose nodes are continuous maps
// and whose edges join maps differing pointwise by at most one adjacency
// step. The space has at most |Y|^|X| nodes, so exploration is capped and
// running out of budget is reported as its own outcome, never conflated
// with a genuine negative.
inline constexpr std::size_t kDefaultStateCap = 2'000'000;

enum class HomotopyOutcome { kFound, kNotHomotopic, kCapExceeded };

struct HomotopyResult {
    HomotopyOutcome outcome = HomotopyOutcome::kNotHomotopic;
    std::optional<Homotopy> witness;
    std::size_t states_explored = 0;

    bool found() const { return outcome == HomotopyOutcome::kFound; }
};

// Breadth-first search for a homotopy between two continuous maps with
// the same domain and codomain. A witness, when one exists, is the
// lexicographically least among the minimum-length ones. Equal maps get
// the lazy two-frame witness (m must be positive).
HomotopyResult are_homotopic(const DigitalMap& f, const DigitalMap& g,
                             std::size_t state_cap = kDefaultStateCap);

// Same search restricted to frames fixing x0 -> y0; requires
// f(x0) = g(x0) = y0.
HomotopyResult are_pointed_homotopic(const DigitalMap& f, const DigitalMap& g,
                                     const LatticePoint& x0, const LatticePoint& y0,
                                     std::size_t state_cap = kDefaultStateCap);

// Endpoint-fixed homotopy between two equal-length paths with the same
// endpoints: frames are paths, positions 0 and m never move.
HomotopyResult are_paths_endpoint_homotopic(const DigitalPath& f, const DigitalPath& g,
                                            std::size_t state_cap = kDefaultStateCap);

struct LoopsEqualDetail {
    bool equivalent = false;
    bool cap_hit = false;
    int common_length = -1;  // length at which extensions were joined
};

// Bounded decision of loop-class equality: look for trivial extensions of
// f and of g with a common length at most max_len joined by an
// endpoint-fixed homotopy. False means "not found within the bound".
LoopsEqualDetail loops_equivalent_detail(const DigitalPath& f, const DigitalPath& g, int max_len,
                                         std::size_t state_cap = kDefaultStateCap);
bool loops_equivalent(const DigitalPath& f, const DigitalPath& g, int max_len,
                      std::size_t state_cap = kDefaultStateCap);

// A homotopy, read as a single map off the cartesian product of its
// source with [0,m]: the frame and track conditions together are exactly
// continuity for the product adjacency.
DigitalMap homotopy_as_product_map(const Homotopy& F);

}  // namespace dighom

#endif
