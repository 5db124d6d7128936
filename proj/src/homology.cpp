#include "dighom/homology.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dighom {

namespace {

void require_group_dimension(int n) {
    if (n < 0) throw std::invalid_argument("homology dimension must be nonnegative");
    if (n > kMaxChainDimension - 1)
        throw std::invalid_argument("homology dimension exceeds the configured maximum");
}

std::vector<Int> torsion_of(const SmithDecomposition& snf) {
    std::vector<Int> out;
    for (const Int& d : snf.invariant_factors)
        if (d >= 2) out.push_back(d);
    return out;
}

// Everything needed to name classes in dimension n: a lattice basis of the
// cycle kernel (the trailing columns of V from the boundary decomposition),
// rewritten by Uinv of a second decomposition so that the boundary image
// becomes diagonal inside it. Column j of `generators` represents a class
// of order factors[j] (infinite past the image rank); columns with factor
// one are trivial and carry no class.
struct GeneratorData {
    Eigen::Index cycle_count = 0;
    Eigen::Index kernel_dim = 0;
    Eigen::Index image_rank = 0;
    IntMatrix generators;
    IntMatrix uprime;
    IntMatrix vinv_bottom;
    std::vector<Int> factors;
    HomologyGroup group;
    std::vector<Eigen::Index> class_columns;
    std::vector<Int> class_orders;
};

class CachedComplex {
  public:
    explicit CachedComplex(DigitalImage img) : image_(std::move(img)) {}

    const DigitalImage& image() const { return image_; }

    const std::vector<SingularSimplex>& basis(int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = bases_.find(n);
        if (it == bases_.end()) it = bases_.emplace(n, enumerate_singular(image_, n)).first;
        return it->second;
    }

    const SparseIntMatrix& boundary(int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = boundaries_.find(n);
        if (it == boundaries_.end()) {
            static const std::vector<SingularSimplex> kEmpty;
            const auto& lower = n == 0 ? kEmpty : basis(n - 1);
            it = boundaries_.emplace(n, boundary_matrix_between(lower, basis(n))).first;
        }
        return it->second;
    }

    const SmithDecomposition& boundary_snf(int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = snfs_.find(n);
        if (it == snfs_.end()) it = snfs_.emplace(n, smith_normal_form(boundary(n))).first;
        return it->second;
    }

    const GeneratorData& generators(int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = generator_data_.find(n);
        if (it == generator_data_.end()) it = generator_data_.emplace(n, compute(n)).first;
        return it->second;
    }

  private:
    GeneratorData compute(int n) {
        GeneratorData gd;
        gd.cycle_count = static_cast<Eigen::Index>(basis(n).size());
        IntMatrix lower = to_dense(boundary(n));
        IntMatrix upper = to_dense(boundary(n + 1));
        SmithDecomposition snf_lower = smith_normal_form(lower, true);
        gd.kernel_dim = gd.cycle_count - snf_lower.rank();
        gd.vinv_bottom = snf_lower.Vinv.bottomRows(gd.kernel_dim);
        IntMatrix kernel = snf_lower.V.rightCols(gd.kernel_dim);
        IntMatrix inside = gd.vinv_bottom * upper;
        SmithDecomposition snf_inside = smith_normal_form(inside, true);
        gd.image_rank = snf_inside.rank();
        gd.generators = kernel * snf_inside.Uinv;
        gd.uprime = snf_inside.U;
        gd.factors = snf_inside.invariant_factors;
        gd.group.betti = gd.kernel_dim - gd.image_rank;
        gd.group.torsion = torsion_of(snf_inside);

        // The factors inside the kernel must agree with the factors of the
        // raw boundary, and every generator column must be a cycle.
        const SmithDecomposition& plain = boundary_snf(n + 1);
        if (plain.rank() != gd.image_rank || torsion_of(plain) != gd.group.torsion)
            throw std::logic_error("generator decomposition disagrees with the boundary factors");
        IntMatrix check = lower * gd.generators;
        for (Eigen::Index j = 0; j < check.cols(); ++j)
            for (Eigen::Index i = 0; i < check.rows(); ++i)
                if (check(i, j) != 0)
                    throw std::logic_error("generator column is not a cycle");

        for (Eigen::Index j = gd.image_rank; j < gd.kernel_dim; ++j) {
            gd.class_columns.push_back(j);
            gd.class_orders.push_back(0);
        }
        for (Eigen::Index j = 0; j < gd.image_rank; ++j) {
            if (gd.factors[static_cast<std::size_t>(j)] < 2) continue;
            gd.class_columns.push_back(j);
            gd.class_orders.push_back(gd.factors[static_cast<std::size_t>(j)]);
        }
        return gd;
    }

    DigitalImage image_;
    std::recursive_mutex mu_;
    std::map<int, std::vector<SingularSimplex>> bases_;
    std::map<int, SparseIntMatrix> boundaries_;
    std::map<int, SmithDecomposition> snfs_;
    std::map<int, GeneratorData> generator_data_;
};

std::shared_ptr<CachedComplex> complex_for(const DigitalImage& image) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<CachedComplex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[image.structural_key()];
    if (!slot) slot = std::make_shared<CachedComplex>(image);
    return slot;
}

int chain_index(const std::vector<SingularSimplex>& basis, const SingularSimplex& sigma) {
    auto it = std::lower_bound(basis.begin(), basis.end(), sigma);
    if (it == basis.end() || !(*it == sigma))
        throw std::invalid_argument("chain mentions a simplex outside the image");
    return static_cast<int>(it - basis.begin());
}

IntVector chain_vector(const std::vector<SingularSimplex>& basis, const Chain& c) {
    IntVector v = IntVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [sigma, coeff] : c.terms) v(chain_index(basis, sigma)) = coeff;
    return v;
}

// Class coordinates of a kernel vector: free entries verbatim, torsion
// entries reduced into [0, d), unit entries dropped.
IntVector class_coordinates(const GeneratorData& gd, const IntVector& cycle_vec) {
    IntVector w = gd.uprime * IntVector(gd.vinv_bottom * cycle_vec);
    IntVector out(static_cast<Eigen::Index>(gd.class_columns.size()));
    for (std::size_t i = 0; i < gd.class_columns.size(); ++i) {
        Int value = w(gd.class_columns[i]);
        if (gd.class_orders[i] != 0) {
            value %= gd.class_orders[i];
            if (value < 0) value += gd.class_orders[i];
        }
        out(static_cast<Eigen::Index>(i)) = value;
    }
    return out;
}

}  // namespace

HomologyGroup homology(const DigitalImage& image, int n) {
    require_group_dimension(n);
    auto cx = complex_for(image);
    HomologyGroup g;
    Eigen::Index cycles = static_cast<Eigen::Index>(cx->basis(n).size());
    g.betti = cycles - cx->boundary_snf(n).rank() - cx->boundary_snf(n + 1).rank();
    g.torsion = torsion_of(cx->boundary_snf(n + 1));
    return g;
}

HomologyGenerators homology_generators(const DigitalImage& image, int n) {
    require_group_dimension(n);
    auto cx = complex_for(image);
    const GeneratorData& gd = cx->generators(n);
    const auto& basis = cx->basis(n);
    HomologyGenerators out;
    out.group = gd.group;
    for (std::size_t i = 0; i < gd.class_columns.size(); ++i) {
        HomologyClassRep rep;
        rep.order = gd.class_orders[i];
        rep.cycle.n = n;
        for (Eigen::Index row = 0; row < gd.cycle_count; ++row) {
            const Int& coeff = gd.generators(row, gd.class_columns[i]);
            if (coeff != 0) rep.cycle.terms.emplace(basis[static_cast<std::size_t>(row)], coeff);
        }
        out.classes.push_back(std::move(rep));
    }
    if (homology(image, n) != gd.group)
        throw std::logic_error("generator decomposition disagrees with the group");
    return out;
}

IntVector homology_class_coordinates(const DigitalImage& image, int n, const Chain& cycle) {
    require_group_dimension(n);
    if (cycle.n != n) throw std::invalid_argument("chain dimension does not match");
    if (!boundary_of_chain(cycle).is_zero())
        throw std::invalid_argument("chain is not a cycle");
    auto cx = complex_for(image);
    return class_coordinates(cx->generators(n), chain_vector(cx->basis(n), cycle));
}

IntMatrix induced_homology_map(const DigitalMap& f, int n) {
    require_group_dimension(n);
    if (!is_continuous(f))
        throw std::invalid_argument("induced maps are defined for continuous maps only");
    auto cx = complex_for(f.domain());
    auto cy = complex_for(f.codomain());
    const GeneratorData& gx = cx->generators(n);
    const GeneratorData& gy = cy->generators(n);
    SparseIntMatrix chain_map = induced_chain_map_between(f, cx->basis(n), cy->basis(n));
    IntMatrix mapped = chain_map * gx.generators;
    IntMatrix dense_boundary = to_dense(cy->boundary(n));
    IntMatrix cycle_check = dense_boundary * mapped;
    for (Eigen::Index j = 0; j < cycle_check.cols(); ++j)
        for (Eigen::Index i = 0; i < cycle_check.rows(); ++i)
            if (cycle_check(i, j) != 0)
                throw std::logic_error("mapped generator is not a cycle");
    IntMatrix out(static_cast<Eigen::Index>(gy.class_columns.size()),
                  static_cast<Eigen::Index>(gx.class_columns.size()));
    for (std::size_t j = 0; j < gx.class_columns.size(); ++j)
        out.col(static_cast<Eigen::Index>(j)) =
            class_coordinates(gy, mapped.col(gx.class_columns[j]));
    return out;
}

IntMatrix reduce_induced_matrix(IntMatrix m, const HomologyGroup& codomain_group) {
    Eigen::Index expected = codomain_group.betti + static_cast<Eigen::Index>(codomain_group.torsion.size());
    if (m.rows() != expected)
        throw std::invalid_argument("matrix rows do not match the codomain group");
    for (std::size_t t = 0; t < codomain_group.torsion.size(); ++t) {
        Eigen::Index row = codomain_group.betti + static_cast<Eigen::Index>(t);
        const Int& d = codomain_group.torsion[t];
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Int value = m(row, j) % d;
            if (value < 0) value += d;
            m(row, j) = value;
        }
    }
    return m;
}

bool groups_isomorphic(const HomologyGroup& a, const HomologyGroup& b) { return a == b; }

std::string format_homology_group(const HomologyGroup& g) {
    if (g.betti == 0 && g.torsion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    if (g.betti == 1) {
        out << "Z";
        first = false;
    } else if (g.betti > 1) {
        out << "Z^" << g.betti;
        first = false;
    }
    for (const Int& d : g.torsion) {
        if (!first) out << " (+) ";
        out << "Z/" << d.get_str();
        first = false;
    }
    return out.str();
}

std::string format_homology_line(int n, const HomologyGroup& g) {
    std::ostringstream out;
    out << "H_" << n << " = " << format_homology_group(g);
    return out.str();
}

bool verify_functoriality(const DigitalMap& f, const DigitalMap& g, int n) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("maps do not compose");
    IntMatrix direct = induced_homology_map(compose(g, f), n);
    HomologyGroup target = homology(g.codomain(), n);
    IntMatrix staged =
        reduce_induced_matrix(induced_homology_map(g, n) * induced_homology_map(f, n), target);
    if (!matrices_equal(direct, staged)) return false;
    for (const DigitalImage* image : {&f.domain(), &f.codomain(), &g.codomain()}) {
        IntMatrix id_matrix = induced_homology_map(DigitalMap::identity(*image), n);
        if (!matrices_equal(id_matrix, IntMatrix(IntMatrix::Identity(id_matrix.rows(),
                                                                     id_matrix.cols()))))
            return false;
    }
    return true;
}

PsiHomotopyReport verify_psi_homotopy(const DigitalMap& f, const DigitalMap& g, const Homotopy& F,
                                      int n) {
    if (!is_homotopy_valid(F, f, g))
        throw std::invalid_argument("homotopy does not connect the maps");
    DigitalImage interval = digital_interval(0, F.m());
    DigitalMap product_map = homotopy_as_product_map(F);
    DigitalMap slice_start = psi(f.domain(), interval, 0);
    DigitalMap slice_end = psi(f.domain(), interval, F.m());
    if (!(compose(product_map, slice_start) == f) || !(compose(product_map, slice_end) == g))
        throw std::logic_error("product parameterization does not restrict to the maps");
    PsiHomotopyReport report;
    report.slices_agree =
        matrices_equal(induced_homology_map(slice_start, n), induced_homology_map(slice_end, n));
    report.maps_agree = matrices_equal(induced_homology_map(f, n), induced_homology_map(g, n));
    return report;
}

bool verify_inclusion_injective(const DigitalImage& part, const DigitalImage& whole, int n) {
    if (n < 0 || n > kMaxChainDimension)
        throw std::invalid_argument("chain dimension out of range");
    std::vector<int> table(static_cast<std::size_t>(part.size()));
    for (int i = 0; i < part.size(); ++i) {
        auto w = whole.index_of(part.point(i));
        if (!w) throw std::invalid_argument("part has a point outside the whole image");
        table[static_cast<std::size_t>(i)] = *w;
    }
    DigitalMap inclusion(part, whole, table);
    if (!is_continuous(inclusion))
        throw std::invalid_argument("inclusion is not continuous");
    auto cp = complex_for(part);
    auto cw = complex_for(whole);
    SparseIntMatrix m = induced_chain_map_between(inclusion, cp->basis(n), cw->basis(n));
    std::vector<Eigen::Index> hit_rows;
    for (int k = 0; k < m.outerSize(); ++k) {
        int entries = 0;
        for (SparseIntMatrix::InnerIterator it(m, k); it; ++it) {
            ++entries;
            if (it.value() != 1) return false;
            hit_rows.push_back(it.row());
        }
        if (entries != 1) return false;
    }
    std::sort(hit_rows.begin(), hit_rows.end());
    return std::adjacent_find(hit_rows.begin(), hit_rows.end()) == hit_rows.end();
}

Chain hurewicz_chain(const DigitalPath& loop) {
    if (loop.m() < 2)
        throw std::invalid_argument("loop too short to split off its first step");
    Chain c;
    c.n = 1;
    SingularSimplex first_step{{loop.values[0], loop.values[1]}};
    c.terms.emplace(first_step, Int(1));
    return c;
}

HurewiczReport hurewicz_counterexample() {
    HurewiczReport report;
    report.square = DigitalImage(AdjacencySpec{2, 1}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    LatticePoint x0{0, 0}, x1{1, 0}, x2{1, 1}, x3{0, 1};
    report.f = DigitalPath::from_points(report.square, {x0, x1, x2, x3, x0});
    report.g = DigitalPath::from_points(report.square, {x0, x0, x1, x2, x3, x0});
    report.unit = DigitalPath::constant_loop(report.square, x0, 1);
    report.square_h1 = homology(report.square, 1);
    report.product_matches = path_product(report.unit, report.f) == report.g;
    report.loops_same_class = loops_equivalent(report.f, report.g, 5);
    report.chains_differ = !(hurewicz_chain(report.f) == hurewicz_chain(report.g));
    return report;
}

}  // namespace dighom
