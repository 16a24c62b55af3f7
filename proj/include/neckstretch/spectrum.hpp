#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "neckstretch/errors.hpp"

namespace neckstretch {

// Spectrum of the asymptotic operator A = -J0 d/dt - T diag(0,1) at a
// T-periodic torus orbit, discretized on period-1 loops with values in the
// plane and solved as a dense symmetric eigenproblem. The operator is
// expressed in the global frame of the contact planes on the unit cotangent
// bundle of the flat torus; all winding numbers are relative to that frame.
//
// The spectrum is known in closed form: lambda(lambda + T) = (2 pi m)^2 per
// mode m, so 0 and -T are simple (constant eigenvectors, winding 0) and each
// m >= 1 contributes a pair of double eigenvalues with winding +-m. The
// discretization below reproduces resolved modes exactly:
//
//  * the node count is kept odd. Every real antisymmetric difference
//    stencil annihilates the Nyquist mode of an even grid, which would
//    duplicate the eigenvalues 0 and -T with checkerboard eigenvectors of
//    meaningless winding;
//  * d/dt uses the full trigonometric (order n-1 central) difference
//    weights rather than a fixed-order stencil. Low-order stencils alias
//    near-Nyquist modes into every bounded eigenvalue window, where they
//    shift with the grid: at 256 vs 512 nodes the 2nd-order stencil moves
//    the first positive eigenvalue by 4.2e-4 for T = 2 pi, and its aliased
//    copies of 0 and -T break the multiplicity count.

struct AsymptoticOperatorSpec {
    double period = 1.0;   // orbit period T (total period, covers included)
    int grid_size = 256;   // requested node count; rounded up to odd

    void validate() const {
        if (!(period > 0)) throw std::invalid_argument("asymptotic operator: period must be positive");
        if (grid_size < 16) throw std::invalid_argument("asymptotic operator: grid_size must be >= 16");
    }
};

struct SpectralPoint {
    double eigenvalue = 0.0;
    int winding = 0;
    int multiplicity = 1;
};

struct SpectrumWindow {
    double lo = -1.0;
    double hi = 1.0;
};

namespace detail {

inline int odd_node_count(int grid_size) { return grid_size % 2 == 1 ? grid_size : grid_size + 1; }

/// Antisymmetric periodic differentiation matrix on n (odd) equispaced
/// nodes of the unit circle, exact on loops of winding up to (n-1)/2.
inline Eigen::MatrixXd loop_derivative_matrix(int n) {
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            const int diff = j - k;
            const double sign = (diff % 2 == 0) ? 1.0 : -1.0;
            D(j, k) = sign * std::numbers::pi / std::sin(std::numbers::pi * diff / n);
        }
    }
    return D;
}

/// The 2n x 2n symmetric matrix of -J0 d/dt - T diag(0,1) with unknowns
/// ordered (x_0, y_0, x_1, y_1, ...).
inline Eigen::MatrixXd assemble_operator(int n, double period) {
    const Eigen::MatrixXd D = loop_derivative_matrix(n);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            // -J0 * D(j,k) = D(j,k) * [[0,1],[-1,0]]
            A(2 * j, 2 * k + 1) += D(j, k);
            A(2 * j + 1, 2 * k) -= D(j, k);
        }
        A(2 * j + 1, 2 * j + 1) -= period;
    }
    return A;
}

} // namespace detail

/// Winding number of a closed plane loop given by samples. Throws
/// degenerate_eigenvector when a sample is within 1e-9 of vanishing
/// (relative to the largest sample) or the accumulated angle is not close
/// to a full number of turns; a winding is never guessed.
inline int winding_of_loop(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3) throw degenerate_eigenvector("winding: too few samples");
    double max_norm = 0.0;
    for (auto [x, y] : samples) max_norm = std::max(max_norm, std::hypot(x, y));
    if (max_norm <= 0.0) throw degenerate_eigenvector("winding: zero loop");
    for (auto [x, y] : samples) {
        if (std::hypot(x, y) < 1e-9 * max_norm)
            throw degenerate_eigenvector("winding: loop passes through the origin");
    }
    double total = 0.0;
    const std::size_t n = samples.size();
    for (std::size_t j = 0; j < n; ++j) {
        auto [x0, y0] = samples[j];
        auto [x1, y1] = samples[(j + 1) % n];
        total += std::atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1);
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25)
        throw degenerate_eigenvector("winding: angle sum is not an integer number of turns");
    return static_cast<int>(rounded);
}

/// All eigenvalues of the asymptotic operator inside [window.lo, window.hi],
/// sorted ascending, with the winding number of the eigenvector loops and
/// the multiplicity of each eigenvalue cluster.
inline std::vector<SpectralPoint> asymptotic_operator_spectrum(const AsymptoticOperatorSpec& spec,
                                                               const SpectrumWindow& window) {
    spec.validate();
    if (!(window.lo <= window.hi) || !std::isfinite(window.lo) || !std::isfinite(window.hi))
        throw std::invalid_argument("spectrum: window must be a bounded interval");

    const int n = detail::odd_node_count(spec.grid_size);
    const Eigen::MatrixXd A = detail::assemble_operator(n, spec.period);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: eigensolver failed to converge");

    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();

    // cluster tolerance scaled to the spectral radius; exact double
    // eigenvalues land within a few ulps of each other
    const double radius = std::max(std::abs(values(0)), std::abs(values(2 * n - 1)));
    const double cluster_tol = 1e-9 * std::max(1.0, radius);

    std::vector<SpectralPoint> out;
    for (int i = 0; i < 2 * n;) {
        int j = i;
        while (j + 1 < 2 * n && values(j + 1) - values(j) <= cluster_tol) ++j;
        const double lambda = values((i + j) / 2);
        if (lambda >= window.lo && lambda <= window.hi) {
            std::vector<std::pair<double, double>> loop(n);
            for (int s = 0; s < n; ++s) loop[s] = {vectors(2 * s, i), vectors(2 * s + 1, i)};
            const int w = winding_of_loop(loop);
            for (int m = i + 1; m <= j; ++m) {
                for (int s = 0; s < n; ++s) loop[s] = {vectors(2 * s, m), vectors(2 * s + 1, m)};
                if (winding_of_loop(loop) != w)
                    throw degenerate_eigenvector("spectrum: eigenvalue cluster mixes windings near " +
                                                 std::to_string(lambda));
            }
            out.push_back({lambda, w, j - i + 1});
        }
        i = j + 1;
    }
    return out;
}

} // namespace neckstretch
