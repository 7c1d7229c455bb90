#pragma once

// Exterior-algebra kernel: k-vectors over the canonical lexicographic
// k-subset basis, wedge and inner products, simple unit blades of linear
// subspaces, and the orthogonal decomposition of /\_k R^d into the
// subspaces T_i(A) spanned by basis blades with exactly i factors
// outside A, together with the i-th subspace products <A,B>_i.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "linalg.hpp"

namespace flagmv {

class MultiVector {
public:
    MultiVector(int d, int k)
        : d_(d), k_(k), coeffs_(std::size_t(binom_i(d, k)), 0.0) {
        if (d < 0 || k < 0 || k > d)
            throw std::invalid_argument("MultiVector: need 0 <= k <= d");
    }

    static MultiVector scalar(int d, double value) {
        MultiVector m(d, 0);
        m.coeffs_[0] = value;
        return m;
    }

    static MultiVector from_vector(const VectorXd& v) {
        MultiVector m(int(v.size()), 1);
        for (int i = 0; i < v.size(); ++i) m.coeffs_[i] = v[i];
        return m;
    }

    // Blade of an orthonormal d x k frame; coefficients are the k x k minors.
    static MultiVector from_frame(const MatrixXd& frame) {
        const int d = int(frame.rows());
        const int k = int(frame.cols());
        MultiVector m(d, k);
        auto subsets = k_subsets(d, k);
        for (std::size_t r = 0; r < subsets.size(); ++r)
            m.coeffs_[r] = minor_det(frame, subsets[r]);
        return m;
    }

    // Basis blade e_{S[0]} ^ ... ^ e_{S[k-1]} for a sorted index set S.
    static MultiVector basis_blade(int d, const std::vector<int>& S) {
        MultiVector m(d, int(S.size()));
        m.coeffs_[subset_rank(S, d)] = 1.0;
        return m;
    }

    int dim() const { return d_; }
    int grade() const { return k_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double& operator[](std::size_t i) { return coeffs_[i]; }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    double norm_squared() const {
        double s = 0.0;
        for (double c : coeffs_) s += c * c;
        return s;
    }
    double norm() const { return std::sqrt(norm_squared()); }

    MultiVector& operator*=(double s) {
        for (double& c : coeffs_) c *= s;
        return *this;
    }
    MultiVector operator*(double s) const {
        MultiVector m = *this;
        m *= s;
        return m;
    }
    MultiVector operator+(const MultiVector& o) const {
        check_same(o, "operator+");
        MultiVector m = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) m.coeffs_[i] += o.coeffs_[i];
        return m;
    }
    MultiVector operator-(const MultiVector& o) const {
        check_same(o, "operator-");
        MultiVector m = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) m.coeffs_[i] -= o.coeffs_[i];
        return m;
    }

private:
    void check_same(const MultiVector& o, const char* op) const {
        if (d_ != o.d_ || k_ != o.k_)
            throw std::invalid_argument(std::string(op) + ": dimension/grade mismatch");
    }

    int d_, k_;
    std::vector<double> coeffs_;
};

// Exterior product. Bilinear, associative, graded anti-commutative:
// wedge(x,y) = (-1)^{grade(x) grade(y)} wedge(y,x).
inline MultiVector wedge(const MultiVector& x, const MultiVector& y) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    const int d = x.dim();
    const int j = x.grade(), k = y.grade();
    if (j + k > d)
        throw std::invalid_argument("wedge: grade sum exceeds dimension");
    MultiVector out(d, j + k);
    auto Sj = k_subsets(d, j);
    auto Sk = k_subsets(d, k);
    for (std::size_t a = 0; a < Sj.size(); ++a) {
        if (x[a] == 0.0) continue;
        for (std::size_t b = 0; b < Sk.size(); ++b) {
            if (y[b] == 0.0) continue;
            int sign = merge_sign(Sj[a], Sk[b]);
            if (sign == 0) continue;
            auto merged = merge_sorted(Sj[a], Sk[b]);
            out[subset_rank(merged, d)] += sign * x[a] * y[b];
        }
    }
    return out;
}

// Scalar product on /\_k R^d; for simple inputs this is the Gram determinant
// det(<u_i, v_j>).
inline double inner(const MultiVector& x, const MultiVector& y) {
    if (x.dim() != y.dim() || x.grade() != y.grade())
        throw std::invalid_argument("inner: dimension/grade mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) s += x[i] * y[i];
    return s;
}

// A k-dimensional linear subspace of R^d carried as an orthonormal frame
// plus its simple unit blade (defined up to sign) and a deterministic
// extension of the frame to an orthonormal basis of R^d.
struct Subspace {
    int d = 0;
    int k = 0;
    MatrixXd frame;          // d x k, orthonormal columns
    MatrixXd ext;            // d x d, first k columns = frame
    MultiVector blade;

    Subspace() : blade(0, 0) {}

    explicit Subspace(const MatrixXd& orthonormal_frame)
        : d(int(orthonormal_frame.rows())),
          k(int(orthonormal_frame.cols())),
          frame(orthonormal_frame),
          ext(complete_basis(orthonormal_frame)),
          blade(MultiVector::from_frame(orthonormal_frame)) {
        MatrixXd G = frame.transpose() * frame - MatrixXd::Identity(k, k);
        if (G.cwiseAbs().maxCoeff() > 1e-9)
            throw std::invalid_argument("Subspace: frame not orthonormal");
    }

    bool contains(const VectorXd& v, double tol = 1e-9) const {
        return (v - project_onto(frame, v)).norm() <= tol * std::max(1.0, v.norm());
    }
};

// Gram-Schmidt orthonormalization followed by the wedge of the frame.
// Throws on rank deficiency below 1e-10.
inline Subspace blade_from_frame(const MatrixXd& vectors) {
    return Subspace(orthonormalize(vectors, kRankTol));
}

// Orthonormal basis of T_i(A): all blades of the extended basis a_1..a_d of A
// with |I| = k and |I intersect {1..k}| = k - i.
struct TiaBasis {
    int i = 0;
    std::vector<std::vector<int>> index_sets; // into the extended basis of A
    std::vector<MultiVector> elements;
};

inline TiaBasis tia_basis(const Subspace& A, int i) {
    const int d = A.d, k = A.k;
    const int imax = std::min(k, d - k);
    if (i < 0 || i > imax)
        throw std::invalid_argument("tia_basis: index i out of range");
    TiaBasis out;
    out.i = i;
    for (const auto& I : k_subsets(d, k)) {
        int inside = 0;
        for (int v : I)
            if (v < k) ++inside;
        if (inside != k - i) continue;
        MatrixXd F(d, k);
        for (int c = 0; c < k; ++c) F.col(c) = A.ext.col(I[c]);
        out.index_sets.push_back(I);
        out.elements.push_back(MultiVector::from_frame(F));
    }
    return out;
}

// i-th product <A,B>_i = || p_{T_i A} B || computed as the root of the sum of
// squared Plucker minors of B's frame expressed in A's extended basis.
// Symmetric in A and B; values in [0,1]; independent of frame and sign choice.
inline double subspace_product_i(const Subspace& A, const Subspace& B, int i) {
    if (A.d != B.d || A.k != B.k)
        throw std::invalid_argument("subspace_product_i: dimension/grade mismatch");
    const int d = A.d, k = A.k;
    const int imax = std::min(k, d - k);
    if (i < 0 || i > imax)
        throw std::invalid_argument("subspace_product_i: index i out of range");
    MatrixXd Bc = A.ext.transpose() * B.frame; // B's frame in A's basis
    double s = 0.0;
    for (const auto& I : k_subsets(d, k)) {
        int inside = 0;
        for (int v : I)
            if (v < k) ++inside;
        if (inside != k - i) continue;
        double m = minor_det(Bc, I);
        s += m * m;
    }
    return std::sqrt(std::min(1.0, std::max(0.0, s)));
}

} // namespace flagmv
