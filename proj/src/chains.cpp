#include "dighom/chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dighom {

namespace {

void require_same_dimension(const Chain& a, const Chain& b) {
    if (a.n != b.n) throw std::invalid_argument("chain arithmetic needs equal dimensions");
}

void add_term(Chain& c, const SingularSimplex& sigma, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.terms.emplace(sigma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.terms.erase(it);
    }
}

int basis_index(const std::vector<SingularSimplex>& basis, const SingularSimplex& sigma) {
    auto it = std::lower_bound(basis.begin(), basis.end(), sigma);
    if (it == basis.end() || !(*it == sigma))
        throw std::invalid_argument("simplex missing from the given basis");
    return static_cast<int>(it - basis.begin());
}

}  // namespace

Chain operator+(const Chain& a, const Chain& b) {
    require_same_dimension(a, b);
    Chain out = a;
    for (const auto& [sigma, coeff] : b.terms) add_term(out, sigma, coeff);
    return out;
}

Chain operator-(const Chain& a, const Chain& b) {
    require_same_dimension(a, b);
    Chain out = a;
    for (const auto& [sigma, coeff] : b.terms) add_term(out, sigma, -coeff);
    return out;
}

Chain operator*(const Int& c, const Chain& a) {
    Chain out;
    out.n = a.n;
    if (c == 0) return out;
    for (const auto& [sigma, coeff] : a.terms) out.terms.emplace(sigma, c * coeff);
    return out;
}

Chain boundary_of_simplex(const SingularSimplex& sigma) {
    Chain out;
    out.n = sigma.n() - 1;
    if (sigma.n() == 0) return out;
    Int sign = 1;
    for (int i = 0; i <= sigma.n(); ++i) {
        add_term(out, apply_face(sigma, i), sign);
        sign = -sign;
    }
    return out;
}

Chain boundary_of_chain(const Chain& c) {
    Chain out;
    out.n = c.n - 1;
    for (const auto& [sigma, coeff] : c.terms) {
        Chain part = boundary_of_simplex(sigma);
        for (const auto& [tau, face_coeff] : part.terms) add_term(out, tau, coeff * face_coeff);
    }
    return out;
}

SparseIntMatrix boundary_matrix_between(const std::vector<SingularSimplex>& lower,
                                        const std::vector<SingularSimplex>& upper) {
    SparseIntMatrix m(static_cast<Eigen::Index>(lower.size()),
                      static_cast<Eigen::Index>(upper.size()));
    std::vector<Eigen::Triplet<Int>> entries;
    for (std::size_t j = 0; j < upper.size(); ++j) {
        Chain b = boundary_of_simplex(upper[j]);
        for (const auto& [tau, coeff] : b.terms)
            entries.emplace_back(basis_index(lower, tau), static_cast<int>(j), coeff);
    }
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

SparseIntMatrix boundary_matrix(const DigitalImage& image, int n) {
    if (n < 0) throw std::invalid_argument("boundary dimension must be nonnegative");
    if (n > kMaxChainDimension)
        throw std::invalid_argument("boundary dimension exceeds the configured maximum");
    std::vector<SingularSimplex> lower;
    if (n > 0) lower = enumerate_singular(image, n - 1);
    return boundary_matrix_between(lower, enumerate_singular(image, n));
}

SparseIntMatrix induced_chain_map_between(const DigitalMap& f,
                                          const std::vector<SingularSimplex>& domain_basis,
                                          const std::vector<SingularSimplex>& codomain_basis) {
    SparseIntMatrix m(static_cast<Eigen::Index>(codomain_basis.size()),
                      static_cast<Eigen::Index>(domain_basis.size()));
    std::vector<Eigen::Triplet<Int>> entries;
    for (std::size_t j = 0; j < domain_basis.size(); ++j) {
        SingularSimplex image_simplex;
        image_simplex.values.reserve(domain_basis[j].values.size());
        for (int v : domain_basis[j].values) image_simplex.values.push_back(f.value_index(v));
        entries.emplace_back(basis_index(codomain_basis, image_simplex), static_cast<int>(j),
                             Int(1));
    }
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

SparseIntMatrix induced_chain_map(const DigitalMap& f, int n) {
    if (n < 0) throw std::invalid_argument("chain map dimension must be nonnegative");
    if (n > kMaxChainDimension)
        throw std::invalid_argument("chain map dimension exceeds the configured maximum");
    if (!is_continuous(f)) throw std::invalid_argument("chain maps require a continuous map");
    return induced_chain_map_between(f, enumerate_singular(f.domain(), n),
                                     enumerate_singular(f.codomain(), n));
}

Chain map_chain(const DigitalMap& f, const Chain& c) {
    Chain out;
    out.n = c.n;
    for (const auto& [sigma, coeff] : c.terms) {
        SingularSimplex tau;
        tau.values.reserve(sigma.values.size());
        for (int v : sigma.values) tau.values.push_back(f.value_index(v));
        add_term(out, tau, coeff);
    }
    return out;
}

bool verify_dd_zero(const DigitalImage& image, int n) {
    if (n < 1) throw std::invalid_argument("double boundary check needs n >= 1");
    SparseIntMatrix lower = boundary_matrix(image, n);
    SparseIntMatrix upper = boundary_matrix(image, n + 1);
    return is_zero_matrix(SparseIntMatrix(lower * upper));
}

bool verify_chain_commutes(const DigitalMap& f, int n) {
    if (n < 1) throw std::invalid_argument("commutation check needs n >= 1");
    SparseIntMatrix left = induced_chain_map(f, n - 1) * boundary_matrix(f.domain(), n);
    SparseIntMatrix right = boundary_matrix(f.codomain(), n) * induced_chain_map(f, n);
    return is_zero_matrix(SparseIntMatrix(left - right));
}

bool verify_chain_homotopy(const std::vector<SparseIntMatrix>& phi, const DigitalMap& f,
                           const DigitalMap& g, int n) {
    if (n < 1) throw std::invalid_argument("chain homotopy check needs n >= 1");
    if (phi.size() <= static_cast<std::size_t>(n))
        throw std::invalid_argument("chain homotopy check needs phi up to dimension n");
    SparseIntMatrix difference = induced_chain_map(f, n) - induced_chain_map(g, n);
    SparseIntMatrix split = SparseIntMatrix(boundary_matrix(f.codomain(), n + 1) * phi[n]) +
                            SparseIntMatrix(phi[n - 1] * boundary_matrix(f.domain(), n));
    return is_zero_matrix(SparseIntMatrix(difference - split));
}

std::string matrix_triplet_text(const std::string& name, const SparseIntMatrix& m) {
    std::ostringstream out;
    out << name << " " << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseIntMatrix::InnerIterator it(m, k); it; ++it)
            out << it.row() << " " << it.col() << " " << it.value() << "\n";
    return out.str();
}

std::string format_chain(const DigitalImage& image, const Chain& c) {
    if (c.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [sigma, coeff] : c.terms) {
        Int a = coeff;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) out << a.get_str() << "*";
        out << format_simplex(image, sigma);
        first = false;
    }
    return out.str();
}

}  // namespace dighom
