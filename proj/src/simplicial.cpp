#include "dighom/simplicial.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace dighom {

LatticePoint standard_vertex(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw std::invalid_argument("standard_vertex: index out of range");
    LatticePoint e(static_cast<std::size_t>(n + 1), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

DigitalImage standard_simplex_image(int n) {
    if (n < 0) throw std::invalid_argument("standard simplex dimension must be nonnegative");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) pts.push_back(standard_vertex(n, i));
    return DigitalImage{AdjacencySpec{n + 1, n == 0 ? 1 : 2}, std::move(pts)};
}

std::vector<int> face_vertex_map(int i, int n) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face_vertex_map: index out of range");
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = j < i ? j : j + 1;
    return out;
}

bool is_singular(const DigitalImage& image, const SingularSimplex& sigma) {
    const int count = static_cast<int>(sigma.values.size());
    if (count == 0) return false;
    for (int a = 0; a < count; ++a) {
        int va = sigma.values[static_cast<std::size_t>(a)];
        if (va < 0 || va >= image.size()) return false;
        for (int b = a + 1; b < count; ++b) {
            int vb = sigma.values[static_cast<std::size_t>(b)];
            if (va != vb && !image.adjacent_in(va, vb)) return false;
        }
    }
    return true;
}

SingularSimplex apply_face(const SingularSimplex& sigma, int i) {
    if (sigma.n() < 1) throw std::invalid_argument("apply_face: simplex dimension must be >= 1");
    if (i < 0 || i > sigma.n()) throw std::invalid_argument("apply_face: face index out of range");
    SingularSimplex out;
    out.values.reserve(sigma.values.size() - 1);
    for (int j = 0; j <= sigma.n(); ++j)
        if (j != i) out.values.push_back(sigma.values[static_cast<std::size_t>(j)]);
    return out;
}

namespace {

// Tuples are grown position by position; each new value must be equal or
// adjacent to all earlier ones, so the viable candidates are the
// intersection of closed neighborhoods seen so far. Recursion in index
// order produces the lexicographic enumeration directly.
void extend(const DigitalImage& image, int n, std::vector<int>& prefix,
            const std::vector<int>& candidates, std::vector<SingularSimplex>& out) {
    if (static_cast<int>(prefix.size()) == n + 1) {
        out.push_back(SingularSimplex{prefix});
        return;
    }
    for (int c : candidates) {
        std::vector<int> narrowed;
        if (static_cast<int>(prefix.size()) == n) {
            narrowed = {};  // last position; no further filtering needed
        } else {
            const auto closed = image.closed_neighborhood(c);
            narrowed.reserve(std::min(candidates.size(), closed.size()));
            std::set_intersection(candidates.begin(), candidates.end(), closed.begin(),
                                  closed.end(), std::back_inserter(narrowed));
        }
        prefix.push_back(c);
        extend(image, n, prefix, narrowed, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<SingularSimplex> enumerate_singular(const DigitalImage& image, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_singular: dimension must be nonnegative");
    std::vector<SingularSimplex> out;
    if (image.empty()) return out;
    std::vector<int> all(static_cast<std::size_t>(image.size()));
    for (int i = 0; i < image.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<int> prefix;
    extend(image, n, prefix, all, out);
    return out;
}

bool verify_face_identity(int max_n) {
    auto after = [](const std::vector<int>& outer, const std::vector<int>& inner) {
        std::vector<int> out(inner.size());
        for (std::size_t t = 0; t < inner.size(); ++t)
            out[t] = outer[static_cast<std::size_t>(inner[t])];
        return out;
    };
    for (int n = 1; n <= max_n; ++n) {
        for (int j = 0; j <= n + 1; ++j) {
            for (int k = 0; k < j; ++k) {
                auto left = after(face_vertex_map(j, n + 1), face_vertex_map(k, n));
                auto right = after(face_vertex_map(k, n + 1), face_vertex_map(j - 1, n));
                if (left != right) return false;
            }
        }
    }
    return true;
}

std::string format_simplex(const DigitalImage& image, const SingularSimplex& sigma) {
    std::string s = "[";
    for (std::size_t i = 0; i < sigma.values.size(); ++i) {
        if (i) s += ' ';
        s += format_point(image.point(sigma.values[i]));
    }
    s += ']';
    return s;
}

}  // namespace dighom
