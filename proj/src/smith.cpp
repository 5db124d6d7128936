#include "dighom/smith.hpp"

#include <cstdlib>

namespace dighom {

namespace {

// Elementary operations applied to the working copy, mirrored into the
// transform matrices so that U * M * V stays equal to the working copy.
class Worker {
  public:
    Worker(const IntMatrix& m, bool with_transforms)
        : a_(m), track_(with_transforms), rows_(m.rows()), cols_(m.cols()) {
        if (track_) {
            u_ = IntMatrix::Identity(rows_, rows_);
            uinv_ = IntMatrix::Identity(rows_, rows_);
            v_ = IntMatrix::Identity(cols_, cols_);
            vinv_ = IntMatrix::Identity(cols_, cols_);
        }
    }

    void swap_rows(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a_.row(i).swap(a_.row(j));
        if (track_) {
            u_.row(i).swap(u_.row(j));
            uinv_.col(i).swap(uinv_.col(j));
        }
    }

    void swap_cols(Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a_.col(i).swap(a_.col(j));
        if (track_) {
            v_.col(i).swap(v_.col(j));
            vinv_.row(i).swap(vinv_.row(j));
        }
    }

    // row i -= q * row j
    void row_sub(Eigen::Index i, const Int& q, Eigen::Index j) {
        if (q == 0) return;
        a_.row(i) -= q * a_.row(j);
        if (track_) {
            u_.row(i) -= q * u_.row(j);
            uinv_.col(j) += q * uinv_.col(i);
        }
    }

    // col i -= q * col j
    void col_sub(Eigen::Index i, const Int& q, Eigen::Index j) {
        if (q == 0) return;
        a_.col(i) -= q * a_.col(j);
        if (track_) {
            v_.col(i) -= q * v_.col(j);
            vinv_.row(j) += q * vinv_.row(i);
        }
    }

    void negate_row(Eigen::Index i) {
        a_.row(i) = -a_.row(i);
        if (track_) {
            u_.row(i) = -u_.row(i);
            uinv_.col(i) = -uinv_.col(i);
        }
    }

    const Int& at(Eigen::Index i, Eigen::Index j) const { return a_(i, j); }
    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }

    IntMatrix& a() { return a_; }
    IntMatrix& u() { return u_; }
    IntMatrix& uinv() { return uinv_; }
    IntMatrix& v() { return v_; }
    IntMatrix& vinv() { return vinv_; }

  private:
    IntMatrix a_;
    bool track_;
    Eigen::Index rows_, cols_;
    IntMatrix u_, uinv_, v_, vinv_;
};

bool find_pivot(const Worker& w, Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
    bool found = false;
    Int best = 0;
    for (Eigen::Index j = t; j < w.cols(); ++j) {
        for (Eigen::Index i = t; i < w.rows(); ++i) {
            const Int& x = w.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

// Clears row and column t except for the pivot. Division remainders are
// swapped into the pivot slot, so the pivot magnitude strictly shrinks
// whenever a pass is not clean.
void eliminate_at(Worker& w, Eigen::Index t) {
    bool again = true;
    while (again) {
        again = false;
        for (Eigen::Index i = t + 1; i < w.rows(); ++i) {
            if (w.at(i, t) == 0) continue;
            Int q = Int(w.at(i, t) / w.at(t, t));
            w.row_sub(i, q, t);
            if (w.at(i, t) != 0) {
                w.swap_rows(t, i);
                again = true;
            }
        }
        for (Eigen::Index j = t + 1; j < w.cols(); ++j) {
            if (w.at(t, j) == 0) continue;
            Int q = Int(w.at(t, j) / w.at(t, t));
            w.col_sub(j, q, t);
            if (w.at(t, j) != 0) {
                w.swap_cols(t, j);
                again = true;
            }
        }
    }
}

// Replaces the diagonal pair (d_k, d_{k+1}) by (gcd, lcm) when the first
// does not divide the second. Only rows and columns k and k+1 are touched.
void fix_pair(Worker& w, Eigen::Index k) {
    w.col_sub(k, Int(-1), k + 1);
    while (w.at(k + 1, k) != 0) {
        Int q = Int(w.at(k, k) / w.at(k + 1, k));
        w.row_sub(k, q, k + 1);
        w.swap_rows(k, k + 1);
    }
    if (w.at(k, k) < 0) w.negate_row(k);
    Int q = Int(w.at(k, k + 1) / w.at(k, k));
    w.col_sub(k + 1, q, k);
    if (w.at(k + 1, k + 1) < 0) w.negate_row(k + 1);
}

SmithDecomposition decompose(const IntMatrix& m, bool with_transforms) {
    Worker w(m, with_transforms);
    Eigen::Index t = 0;
    Eigen::Index bound = std::min(w.rows(), w.cols());
    while (t < bound) {
        Eigen::Index pi = 0, pj = 0;
        if (!find_pivot(w, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        eliminate_at(w, t);
        ++t;
    }
    for (Eigen::Index k = 0; k < t; ++k)
        if (w.at(k, k) < 0) w.negate_row(k);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Eigen::Index k = 0; k + 1 < t; ++k) {
            if (w.at(k + 1, k + 1) % w.at(k, k) == 0) continue;
            fix_pair(w, k);
            changed = true;
        }
    }

    SmithDecomposition out;
    out.invariant_factors.reserve(static_cast<std::size_t>(t));
    for (Eigen::Index k = 0; k < t; ++k) out.invariant_factors.push_back(w.at(k, k));
    out.with_transforms = with_transforms;
    if (with_transforms) {
        out.U = std::move(w.u());
        out.Uinv = std::move(w.uinv());
        out.V = std::move(w.v());
        out.Vinv = std::move(w.vinv());
    }
    return out;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m, bool with_transforms) {
    return decompose(m, with_transforms);
}

SmithDecomposition smith_normal_form(const SparseIntMatrix& m, bool with_transforms) {
    return decompose(to_dense(m), with_transforms);
}

}  // namespace dighom
