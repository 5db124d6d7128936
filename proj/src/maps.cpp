#include "dighom/maps.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dighom {

namespace {

struct TableHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using TableSet = std::unordered_set<std::vector<int>, TableHash>;
using DistMap = std::unordered_map<std::vector<int>, int, TableHash>;

bool values_compatible(const DigitalImage& y, int a, int b) {
    return a == b || y.adjacent_in(a, b);
}

}  // namespace

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != domain_.size())
        throw std::invalid_argument("map table must cover exactly the domain points");
    for (int v : table_)
        if (v < 0 || v >= codomain_.size())
            throw std::invalid_argument("map table value is not a codomain point");
}

DigitalMap DigitalMap::from_pairs(DigitalImage domain, DigitalImage codomain,
                                  const std::vector<std::pair<LatticePoint, LatticePoint>>& pairs) {
    std::vector<int> table(static_cast<std::size_t>(domain.size()), -1);
    for (const auto& [x, y] : pairs) {
        auto xi = domain.index_of(x);
        if (!xi) throw std::invalid_argument("map pair source " + format_point(x) +
                                             " is not a domain point");
        auto yi = codomain.index_of(y);
        if (!yi) throw std::invalid_argument("map pair value " + format_point(y) +
                                             " is not a codomain point");
        int& slot = table[static_cast<std::size_t>(*xi)];
        if (slot != -1 && slot != *yi)
            throw std::invalid_argument("map assigns two values to " + format_point(x));
        slot = *yi;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] == -1)
            throw std::invalid_argument("map is not total: missing value at " +
                                        format_point(domain.point(static_cast<int>(i))));
    return DigitalMap{std::move(domain), std::move(codomain), std::move(table)};
}

DigitalMap DigitalMap::identity(const DigitalImage& image) {
    std::vector<int> table(static_cast<std::size_t>(image.size()));
    for (int i = 0; i < image.size(); ++i) table[static_cast<std::size_t>(i)] = i;
    return DigitalMap{image, image, std::move(table)};
}

DigitalMap DigitalMap::constant(const DigitalImage& domain, const DigitalImage& codomain,
                                const LatticePoint& value) {
    auto vi = codomain.index_of(value);
    if (!vi) throw std::invalid_argument("constant value is not a codomain point");
    return DigitalMap{domain, codomain,
                      std::vector<int>(static_cast<std::size_t>(domain.size()), *vi)};
}

LatticePoint DigitalMap::apply(const LatticePoint& p) const {
    auto i = domain_.index_of(p);
    if (!i) throw std::invalid_argument("point is not in the domain");
    return codomain_.point(value_index(*i));
}

bool DigitalMap::is_bijective() const {
    if (domain_.size() != codomain_.size()) return false;
    std::vector<char> hit(table_.size(), 0);
    for (int v : table_) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_continuous(const DigitalMap& f) {
    const auto& x = f.domain();
    const auto& y = f.codomain();
    for (int i = 0; i < x.size(); ++i)
        for (int j : x.neighbors_of(i)) {
            if (j <= i) continue;
            if (!values_compatible(y, f.value_index(i), f.value_index(j))) return false;
        }
    return true;
}

bool is_continuous_by_subsets(const DigitalMap& f) {
    const auto& x = f.domain();
    const auto& y = f.codomain();
    if (x.size() > 20)
        throw std::invalid_argument("subset-form continuity check is exponential; domain too large");

    auto connected_under = [](const DigitalImage& img, const std::vector<int>& subset) {
        if (subset.empty()) return true;
        std::set<int> in(subset.begin(), subset.end());
        std::set<int> seen{subset.front()};
        std::queue<int> frontier;
        frontier.push(subset.front());
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int w : img.neighbors_of(v))
                if (in.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    frontier.push(w);
                }
        }
        return seen.size() == in.size();
    };

    const unsigned total = 1u << x.size();
    for (unsigned mask = 1; mask < total; ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < x.size(); ++i)
            if (mask & (1u << i)) subset.push_back(i);
        if (!connected_under(x, subset)) continue;
        std::set<int> image_set;
        for (int i : subset) image_set.insert(f.value_index(i));
        std::vector<int> img(image_set.begin(), image_set.end());
        if (!connected_under(y, img)) return false;
    }
    return true;
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("compose: codomain of the inner map must equal the domain "
                                    "of the outer map");
    std::vector<int> table(f.table().size());
    for (std::size_t i = 0; i < table.size(); ++i)
        table[i] = g.value_index(f.table()[i]);
    return DigitalMap{f.domain(), g.codomain(), std::move(table)};
}

bool verify_homeomorphism(const DigitalMap& f, const DigitalMap& g) {
    if (!(f.domain() == g.codomain()) || !(f.codomain() == g.domain()))
        throw std::invalid_argument("verify_homeomorphism: maps must have opposite shapes");
    if (!f.is_bijective()) return false;
    if (!is_continuous(f) || !is_continuous(g)) return false;
    return compose(g, f) == DigitalMap::identity(f.domain()) &&
           compose(f, g) == DigitalMap::identity(g.domain());
}

DigitalPath DigitalPath::from_points(DigitalImage target, const std::vector<LatticePoint>& pts) {
    if (pts.size() < 2)
        throw std::invalid_argument("a digital path has at least two values (m >= 1)");
    DigitalPath p;
    p.values.reserve(pts.size());
    for (const auto& q : pts) {
        auto i = target.index_of(q);
        if (!i) throw std::invalid_argument("path value " + format_point(q) +
                                            " is not a point of the target image");
        p.values.push_back(*i);
    }
    for (std::size_t t = 0; t + 1 < p.values.size(); ++t)
        if (!values_compatible(target, p.values[t], p.values[t + 1]))
            throw std::invalid_argument("path values at steps " + std::to_string(t) + "," +
                                        std::to_string(t + 1) + " are neither equal nor adjacent");
    p.target = std::move(target);
    return p;
}

DigitalPath DigitalPath::constant_loop(DigitalImage target, const LatticePoint& at, int m) {
    if (m < 1) throw std::invalid_argument("a path has positive length");
    auto i = target.index_of(at);
    if (!i) throw std::invalid_argument("base point is not in the image");
    DigitalPath p;
    p.values.assign(static_cast<std::size_t>(m + 1), *i);
    p.target = std::move(target);
    return p;
}

DigitalMap DigitalPath::as_map() const {
    return DigitalMap{digital_interval(0, m()), target, values};
}

DigitalPath path_product(const DigitalPath& f, const DigitalPath& g) {
    if (!(f.target == g.target))
        throw std::invalid_argument("path product requires a common target image");
    if (f.values.back() != g.values.front())
        throw std::invalid_argument("path product requires f to end where g starts");
    DigitalPath out;
    out.target = f.target;
    out.values = f.values;
    out.values.insert(out.values.end(), g.values.begin() + 1, g.values.end());
    return out;
}

bool is_trivial_extension(const DigitalPath& f, const DigitalPath& g) {
    if (!(f.target == g.target))
        throw std::invalid_argument("trivial extension requires a common target image");
    if (!f.is_loop() || !g.is_loop())
        throw std::invalid_argument("trivial extension is defined for loops");
    if (f.base_index() != g.base_index())
        throw std::invalid_argument("trivial extension requires a common base point");

    const auto& a = f.values;
    const auto& b = g.values;
    if (b.size() < a.size()) return false;
    if (b[0] != a[0]) return false;
    // dp[j] says the prefix of g consumed so far can sit at position j of f.
    std::vector<char> dp(a.size(), 0);
    dp[0] = 1;
    for (std::size_t i = 1; i < b.size(); ++i) {
        std::vector<char> next(a.size(), 0);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!dp[j]) continue;
            if (b[i] == a[j]) next[j] = 1;
            if (j + 1 < a.size() && b[i] == a[j + 1]) next[j + 1] = 1;
        }
        dp.swap(next);
    }
    return dp.back() != 0;
}

std::vector<std::vector<int>> trivial_extensions_of_length(const DigitalPath& f, int len) {
    std::set<std::vector<int>> out;
    const auto& a = f.values;
    const int positions = static_cast<int>(a.size());
    if (len + 1 < positions) return {};
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(len + 1));
    // Assign each position of f a repeat count >= 1, total length len+1.
    std::function<void(int, int)> place = [&](int j, int remaining) {
        const int positions_left = positions - j;
        if (positions_left == 0) {
            if (remaining == 0) out.insert(cur);
            return;
        }
        const int max_here = remaining - (positions_left - 1);
        for (int copies = 1; copies <= max_here; ++copies) {
            cur.insert(cur.end(), static_cast<std::size_t>(copies), a[static_cast<std::size_t>(j)]);
            place(j + 1, remaining - copies);
            cur.resize(cur.size() - static_cast<std::size_t>(copies));
        }
    };
    place(0, len + 1);
    return {out.begin(), out.end()};
}

DigitalImage cartesian_product(const DigitalImage& image, const DigitalImage& interval) {
    if (!(interval.spec() == AdjacencySpec{1, 1}) || interval.size() < 2)
        throw std::invalid_argument("cartesian product expects a digital interval");
    const Coord lo = interval.point(0)[0];
    const Coord hi = interval.point(interval.size() - 1)[0];
    if (hi - lo + 1 != interval.size())
        throw std::invalid_argument("cartesian product expects a contiguous interval");

    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>(image.size()) *
                   static_cast<std::size_t>(interval.size()));
    auto slice_point = [&](int xi, Coord t) {
        LatticePoint p = image.point(xi);
        p.push_back(t);
        return p;
    };
    for (int xi = 0; xi < image.size(); ++xi)
        for (Coord t = lo; t <= hi; ++t) points.push_back(slice_point(xi, t));

    std::vector<std::pair<LatticePoint, LatticePoint>> edges;
    for (int xi = 0; xi < image.size(); ++xi)
        for (Coord t = lo; t <= hi; ++t) {
            for (int xj : image.neighbors_of(xi))
                if (xj > xi) edges.emplace_back(slice_point(xi, t), slice_point(xj, t));
            if (t < hi) edges.emplace_back(slice_point(xi, t), slice_point(xi, t + 1));
        }

    return DigitalImage{AdjacencySpec{image.spec().n + 1, 1}, std::move(points), std::move(edges)};
}

DigitalMap psi(const DigitalImage& image, const DigitalImage& interval, Coord i) {
    if (interval.empty() || !(interval.spec() == AdjacencySpec{1, 1}))
        throw std::invalid_argument("psi expects a digital interval");
    const Coord lo = interval.point(0)[0];
    const Coord hi = interval.point(interval.size() - 1)[0];
    if (i != lo && i != hi)
        throw std::invalid_argument("psi slice must sit at an interval endpoint");
    DigitalImage product = cartesian_product(image, interval);
    std::vector<int> table(static_cast<std::size_t>(image.size()));
    for (int xi = 0; xi < image.size(); ++xi) {
        LatticePoint p = image.point(xi);
        p.push_back(i);
        auto pi = product.index_of(p);
        if (!pi) throw std::logic_error("psi: product image misses a slice point");
        table[static_cast<std::size_t>(xi)] = *pi;
    }
    DigitalMap out{image, std::move(product), std::move(table)};
    if (!is_continuous(out)) throw std::logic_error("psi: slice inclusion must be continuous");
    return out;
}

DigitalMap Homotopy::frame(int t) const {
    return DigitalMap{source, target, frames[static_cast<std::size_t>(t)]};
}

namespace {

bool table_continuous(const DigitalImage& x, const DigitalImage& y, const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != x.size()) return false;
    for (int v : t)
        if (v < 0 || v >= y.size()) return false;
    for (int i = 0; i < x.size(); ++i)
        for (int j : x.neighbors_of(i)) {
            if (j <= i) continue;
            if (!values_compatible(y, t[static_cast<std::size_t>(i)],
                                   t[static_cast<std::size_t>(j)]))
                return false;
        }
    return true;
}

}  // namespace

bool is_homotopy_valid(const Homotopy& F, const DigitalMap& f, const DigitalMap& g) {
    if (F.frames.size() < 2) return false;  // m is a positive integer
    if (!(f.domain() == F.source) || !(f.codomain() == F.target)) return false;
    if (!(g.domain() == F.source) || !(g.codomain() == F.target)) return false;
    if (F.frames.front() != f.table() || F.frames.back() != g.table()) return false;
    for (const auto& frame : F.frames)
        if (!table_continuous(F.source, F.target, frame)) return false;
    for (std::size_t t = 0; t + 1 < F.frames.size(); ++t)
        for (std::size_t i = 0; i < F.frames[t].size(); ++i)
            if (!values_compatible(F.target, F.frames[t][i], F.frames[t + 1][i])) return false;
    return true;
}

bool is_pointed_homotopy_valid(const Homotopy& F, const DigitalMap& f, const DigitalMap& g,
                               const LatticePoint& x0, const LatticePoint& y0) {
    if (!is_homotopy_valid(F, f, g)) return false;
    auto xi = F.source.index_of(x0);
    auto yi = F.target.index_of(y0);
    if (!xi || !yi) return false;
    for (const auto& frame : F.frames)
        if (frame[static_cast<std::size_t>(*xi)] != *yi) return false;
    return true;
}

Homotopy reverse_homotopy(const Homotopy& F) {
    Homotopy out = F;
    std::reverse(out.frames.begin(), out.frames.end());
    return out;
}

Homotopy concatenate_homotopy(const Homotopy& F, const Homotopy& G) {
    if (!(F.source == G.source) || !(F.target == G.target))
        throw std::invalid_argument("concatenate_homotopy: shapes differ");
    if (F.frames.back() != G.frames.front())
        throw std::invalid_argument("concatenate_homotopy: F must end where G starts");
    Homotopy out = F;
    out.frames.insert(out.frames.end(), G.frames.begin() + 1, G.frames.end());
    return out;
}

DigitalMap homotopy_as_product_map(const Homotopy& F) {
    const auto interval = digital_interval(0, F.m());
    DigitalImage product = cartesian_product(F.source, interval);
    std::vector<int> table(static_cast<std::size_t>(product.size()));
    for (int p = 0; p < product.size(); ++p) {
        LatticePoint pt = product.point(p);
        const Coord t = pt.back();
        pt.pop_back();
        auto xi = F.source.index_of(pt);
        if (!xi) throw std::logic_error("product point outside the source image");
        table[static_cast<std::size_t>(p)] =
            F.frames[static_cast<std::size_t>(t)][static_cast<std::size_t>(*xi)];
    }
    return DigitalMap{std::move(product), F.target, std::move(table)};
}

namespace {

// Lazily explored graph of continuous maps X -> Y: nodes are tables,
// neighbors differ pointwise by at most one adjacency step and respect the
// pinned positions. Enumeration is in lexicographic table order, which the
// witness construction relies on.
class FunctionSpace {
  public:
    FunctionSpace(const DigitalImage& x, const DigitalImage& y,
                  std::vector<std::pair<int, int>> pins)
        : x_(x), y_(y), pins_(std::move(pins)) {
        earlier_.resize(static_cast<std::size_t>(x_.size()));
        for (int i = 0; i < x_.size(); ++i)
            for (int j : x_.neighbors_of(i))
                if (j < i) earlier_[static_cast<std::size_t>(i)].push_back(j);
        pinned_.assign(static_cast<std::size_t>(x_.size()), -1);
        for (const auto& [at, value] : pins_) pinned_[static_cast<std::size_t>(at)] = value;
    }

    // Calls sink for every continuous neighbor of s (s itself excluded), in
    // lexicographic order, until sink returns false.
    void for_each_neighbor(const std::vector<int>& s,
                           const std::function<bool(const std::vector<int>&)>& sink) const {
        std::vector<int> t;
        t.reserve(s.size());
        bool stop = false;
        extend(s, t, sink, stop);
    }

    bool respects_pins(const std::vector<int>& s) const {
        for (const auto& [at, value] : pins_)
            if (s[static_cast<std::size_t>(at)] != value) return false;
        return true;
    }

  private:
    void extend(const std::vector<int>& s, std::vector<int>& t,
                const std::function<bool(const std::vector<int>&)>& sink, bool& stop) const {
        const std::size_t i = t.size();
        if (i == s.size()) {
            if (t != s && !sink(t)) stop = true;
            return;
        }
        const int pin = pinned_[i];
        const std::vector<int> candidates =
            pin >= 0 ? std::vector<int>{pin} : y_.closed_neighborhood(s[i]);
        for (int c : candidates) {
            bool ok = true;
            for (int j : earlier_[i])
                if (!values_compatible(y_, t[static_cast<std::size_t>(j)], c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            t.push_back(c);
            extend(s, t, sink, stop);
            t.pop_back();
            if (stop) return;
        }
    }

    const DigitalImage& x_;
    const DigitalImage& y_;
    std::vector<std::pair<int, int>> pins_;
    std::vector<int> pinned_;
    std::vector<std::vector<int>> earlier_;
};

struct ReachResult {
    HomotopyOutcome outcome = HomotopyOutcome::kNotHomotopic;
    std::vector<std::vector<int>> frames;  // built only in witness mode
    std::size_t states = 0;
};

// Breadth-first search from the goal side: sources get distance 0 and the
// search stops as soon as any target table is discovered. In witness mode
// (single source, single target) the witness walks greedily downhill from
// the target, taking the lexicographically least neighbor at each level;
// level-complete distances make that walk well defined, and per-step
// minimality gives the least minimum-length frame sequence overall.
ReachResult reach(const FunctionSpace& space, const std::vector<std::vector<int>>& sources,
                  const std::vector<std::vector<int>>& targets, std::size_t cap,
                  bool build_witness) {
    ReachResult result;
    TableSet target_set(targets.begin(), targets.end());
    DistMap dist;
    std::queue<const std::vector<int>*> frontier;

    auto found_at = [&](const std::vector<int>& hit) {
        result.outcome = HomotopyOutcome::kFound;
        result.states = dist.size();
        if (!build_witness) return;
        result.frames.push_back(hit);
        std::vector<int> cur = hit;
        int d = dist.at(hit);
        while (d > 0) {
            std::vector<int> next;
            space.for_each_neighbor(cur, [&](const std::vector<int>& cand) {
                auto it = dist.find(cand);
                if (it != dist.end() && it->second == d - 1) {
                    next = cand;
                    return false;  // lexicographically first downhill neighbor
                }
                return true;
            });
            if (next.empty() && d > 0)
                throw std::logic_error("homotopy witness walk lost its way");
            result.frames.push_back(next);
            cur = std::move(next);
            --d;
        }
    };

    for (const auto& s : sources) {
        auto [it, fresh] = dist.emplace(s, 0);
        if (!fresh) continue;
        if (target_set.count(s)) {
            found_at(s);
            return result;
        }
        frontier.push(&it->first);
    }

    while (!frontier.empty()) {
        const std::vector<int>* cur = frontier.front();
        frontier.pop();
        const int d = dist.at(*cur);
        bool capped = false;
        std::optional<std::vector<int>> hit;
        space.for_each_neighbor(*cur, [&](const std::vector<int>& cand) {
            if (dist.count(cand)) return true;
            if (dist.size() >= cap) {
                capped = true;
                return false;
            }
            auto [it, fresh] = dist.emplace(cand, d + 1);
            (void)fresh;
            if (target_set.count(cand)) {
                hit = cand;
                return false;
            }
            frontier.push(&it->first);
            return true;
        });
        if (hit) {
            found_at(*hit);
            return result;
        }
        if (capped) {
            result.outcome = HomotopyOutcome::kCapExceeded;
            result.states = dist.size();
            return result;
        }
    }
    result.outcome = HomotopyOutcome::kNotHomotopic;
    result.states = dist.size();
    return result;
}

HomotopyResult homotopy_between(const DigitalMap& f, const DigitalMap& g,
                                std::vector<std::pair<int, int>> pins, std::size_t cap) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw std::invalid_argument("homotopy requires maps with identical domain and codomain");
    if (!is_continuous(f) || !is_continuous(g))
        throw std::invalid_argument("homotopy is defined between continuous maps");

    HomotopyResult out;
    if (f.table() == g.table()) {
        // Equality is certified by the lazy witness: m must be positive, so
        // the single frame is repeated once.
        out.outcome = HomotopyOutcome::kFound;
        out.witness = Homotopy{f.domain(), f.codomain(), {f.table(), f.table()}};
        return out;
    }

    FunctionSpace space(f.domain(), f.codomain(), std::move(pins));
    ReachResult r = reach(space, {g.table()}, {f.table()}, cap, true);
    out.states_explored = r.states;
    out.outcome = r.outcome;
    if (r.outcome == HomotopyOutcome::kFound)
        out.witness = Homotopy{f.domain(), f.codomain(), std::move(r.frames)};
    return out;
}

}  // namespace

HomotopyResult are_homotopic(const DigitalMap& f, const DigitalMap& g, std::size_t state_cap) {
    return homotopy_between(f, g, {}, state_cap);
}

HomotopyResult are_pointed_homotopic(const DigitalMap& f, const DigitalMap& g,
                                     const LatticePoint& x0, const LatticePoint& y0,
                                     std::size_t state_cap) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw std::invalid_argument("homotopy requires maps with identical domain and codomain");
    auto xi = f.domain().index_of(x0);
    if (!xi) throw std::invalid_argument("base point is not in the domain");
    auto yi = f.codomain().index_of(y0);
    if (!yi) throw std::invalid_argument("base value is not in the codomain");
    if (f.table()[static_cast<std::size_t>(*xi)] != *yi ||
        g.table()[static_cast<std::size_t>(*xi)] != *yi)
        throw std::invalid_argument("pointed homotopy requires f(x0) = g(x0) = y0");
    return homotopy_between(f, g, {{*xi, *yi}}, state_cap);
}

HomotopyResult are_paths_endpoint_homotopic(const DigitalPath& f, const DigitalPath& g,
                                            std::size_t state_cap) {
    if (!(f.target == g.target))
        throw std::invalid_argument("endpoint homotopy requires a common target image");
    if (f.m() != g.m())
        throw std::invalid_argument("endpoint homotopy requires equal path lengths");
    if (f.values.front() != g.values.front() || f.values.back() != g.values.back())
        throw std::invalid_argument("endpoint homotopy requires equal endpoints");
    return homotopy_between(f.as_map(), g.as_map(),
                            {{0, f.values.front()}, {f.m(), f.values.back()}}, state_cap);
}

LoopsEqualDetail loops_equivalent_detail(const DigitalPath& f, const DigitalPath& g, int max_len,
                                         std::size_t state_cap) {
    if (!(f.target == g.target))
        throw std::invalid_argument("loop comparison requires a common target image");
    if (!f.is_loop() || !g.is_loop())
        throw std::invalid_argument("loop comparison is defined for loops");
    if (f.base_index() != g.base_index())
        throw std::invalid_argument("loop comparison requires a common base point");
    if (max_len < 1) throw std::invalid_argument("loop comparison needs a positive length bound");

    LoopsEqualDetail detail;
    const int base = f.base_index();
    for (int len = std::max(f.m(), g.m()); len <= max_len; ++len) {
        auto ext_f = trivial_extensions_of_length(f, len);
        auto ext_g = trivial_extensions_of_length(g, len);
        if (ext_f.empty() || ext_g.empty()) continue;

        std::vector<std::vector<int>> overlap;
        std::set_intersection(ext_f.begin(), ext_f.end(), ext_g.begin(), ext_g.end(),
                              std::back_inserter(overlap));
        if (!overlap.empty()) {
            detail.equivalent = true;
            detail.common_length = len;
            return detail;
        }

        const DigitalImage parameter_interval = digital_interval(0, len);
        FunctionSpace space(parameter_interval, f.target, {{0, base}, {len, base}});
        ReachResult r = reach(space, ext_g, ext_f, state_cap, false);
        if (r.outcome == HomotopyOutcome::kFound) {
            detail.equivalent = true;
            detail.common_length = len;
            return detail;
        }
        if (r.outcome == HomotopyOutcome::kCapExceeded) detail.cap_hit = true;
    }
    return detail;
}

bool loops_equivalent(const DigitalPath& f, const DigitalPath& g, int max_len,
                      std::size_t state_cap) {
    return loops_equivalent_detail(f, g, max_len, state_cap).equivalent;
}

}  // namespace dighom
