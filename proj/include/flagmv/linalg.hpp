#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace flagmv {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline constexpr double kOrthoTol = 1e-12;
inline constexpr double kRankTol = 1e-10;

// Gram-Schmidt orthonormalization of the columns of M.
// Throws if the columns are rank deficient below `rank_tol`.
inline MatrixXd orthonormalize(const MatrixXd& M, double rank_tol = kRankTol) {
    MatrixXd Q(M.rows(), M.cols());
    for (int j = 0; j < M.cols(); ++j) {
        VectorXd v = M.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < j; ++i) v -= Q.col(i).dot(v) * Q.col(i);
        double n = v.norm();
        if (n < rank_tol)
            throw std::invalid_argument("orthonormalize: rank-deficient frame");
        Q.col(j) = v / n;
    }
    return Q;
}

// Extends an orthonormal d x k frame to an orthonormal basis of R^d by
// Gram-Schmidt over the canonical basis vectors in index order. Deterministic.
inline MatrixXd complete_basis(const MatrixXd& frame) {
    const int d = int(frame.rows());
    const int k = int(frame.cols());
    MatrixXd B(d, d);
    B.leftCols(k) = frame;
    int have = k;
    for (int e = 0; e < d && have < d; ++e) {
        VectorXd v = VectorXd::Zero(d);
        v[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < have; ++i) v -= B.col(i).dot(v) * B.col(i);
        double n = v.norm();
        if (n > 1e-8) B.col(have++) = v / n;
    }
    if (have != d) throw std::runtime_error("complete_basis: completion failed");
    return B;
}

// Orthonormal basis of the orthogonal complement of the span of `frame`.
inline MatrixXd orthogonal_complement(const MatrixXd& frame) {
    MatrixXd B = complete_basis(orthonormalize(frame));
    return B.rightCols(B.cols() - frame.cols());
}

// Projection of v onto the span of an orthonormal frame.
inline VectorXd project_onto(const MatrixXd& frame, const VectorXd& v) {
    return frame * (frame.transpose() * v);
}

// Angle between unit vectors with a clamped arc-cosine.
inline double angle_between(const VectorXd& u, const VectorXd& v) {
    double c = u.dot(v);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

// det of the square matrix formed by the rows `rows` of the d x k matrix M
// (a Plucker minor of the frame).
inline double minor_det(const MatrixXd& M, const std::vector<int>& rows) {
    const int k = int(rows.size());
    if (k == 0) return 1.0;
    if (k == 1) return M(rows[0], 0);
    if (k == 2)
        return M(rows[0], 0) * M(rows[1], 1) - M(rows[0], 1) * M(rows[1], 0);
    if (k == 3) {
        const double a = M(rows[0], 0), b = M(rows[0], 1), c = M(rows[0], 2);
        const double d0 = M(rows[1], 0), e = M(rows[1], 1), f = M(rows[1], 2);
        const double g = M(rows[2], 0), h = M(rows[2], 1), i = M(rows[2], 2);
        return a * (e * i - f * h) - b * (d0 * i - f * g) + c * (d0 * h - e * g);
    }
    MatrixXd S(k, k);
    for (int i = 0; i < k; ++i) S.row(i) = M.row(rows[i]);
    return S.determinant();
}

// det(Gram(A,B)) = <A_1^...^A_k, B_1^...^B_k> for two d x k frames.
inline double frame_blade_inner(const MatrixXd& A, const MatrixXd& B) {
    const int k = int(A.cols());
    if (k == 0) return 1.0;
    MatrixXd G = A.transpose() * B;
    if (k == 1) return G(0, 0);
    if (k == 2) return G(0, 0) * G(1, 1) - G(0, 1) * G(1, 0);
    return G.determinant();
}

} // namespace flagmv
