#pragma once

// Uniform sampling on spheres, Grassmannians G(d,k), sub-Grassmannians of a
// fixed subspace, and Haar rotations. All samplers are measurable functions
// of the Rng stream alone.

#include <Eigen/Dense>
#include <stdexcept>

#include "linalg.hpp"
#include "multivector.hpp"
#include "rng.hpp"

namespace flagmv {

inline VectorXd gaussian_vector(int d, Rng& rng) {
    VectorXd v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.gaussian();
    return v;
}

// Uniform point on S^{d-1} (normalized Gaussian vector).
inline VectorXd sample_sphere(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("sample_sphere: d >= 1 required");
    while (true) {
        VectorXd v = gaussian_vector(d, rng);
        double n = v.norm();
        if (n > 1e-300) return v / n;
    }
}

// Uniform k-subspace of R^d (orthonormalized Gaussian frame; law nu_k^d).
inline Subspace sample_grassmann(int d, int k, Rng& rng) {
    if (k < 0 || k > d) throw std::invalid_argument("sample_grassmann: 0 <= k <= d");
    while (true) {
        MatrixXd G(d, k);
        for (int j = 0; j < k; ++j) G.col(j) = gaussian_vector(d, rng);
        try {
            return Subspace(orthonormalize(G, 1e-8));
        } catch (const std::invalid_argument&) {
            // measure-zero degenerate draw; redraw
        }
    }
}

// Uniform j-subspace of span(W), returned as a subspace of the ambient space.
inline Subspace sample_grassmann_in(const Subspace& W, int j, Rng& rng) {
    if (j < 0 || j > W.k)
        throw std::invalid_argument("sample_grassmann_in: 0 <= j <= dim W");
    while (true) {
        MatrixXd C(W.k, j);
        for (int c = 0; c < j; ++c) C.col(c) = gaussian_vector(W.k, rng);
        MatrixXd F = W.frame * C;
        try {
            return Subspace(orthonormalize(F, 1e-8));
        } catch (const std::invalid_argument&) {
        }
    }
}

// Same, but returns only the orthonormal frame (hot-path variant).
inline MatrixXd sample_subspace_frame_in(const MatrixXd& Wframe, int j, Rng& rng) {
    const int m = int(Wframe.cols());
    while (true) {
        MatrixXd C(m, j);
        for (int c = 0; c < j; ++c) C.col(c) = gaussian_vector(m, rng);
        try {
            return orthonormalize(Wframe * C, 1e-8);
        } catch (const std::invalid_argument&) {
        }
    }
}

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the signs
// of diag(R) folded into Q. det = +-1 with equal probability.
inline MatrixXd sample_rotation(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("sample_rotation: d >= 1 required");
    MatrixXd G(d, d);
    for (int j = 0; j < d; ++j) G.col(j) = gaussian_vector(d, rng);
    Eigen::HouseholderQR<MatrixXd> qr(G);
    MatrixXd Q = qr.householderQ();
    MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    return Q;
}

} // namespace flagmv
