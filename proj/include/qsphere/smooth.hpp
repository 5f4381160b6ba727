#pragma once

// Splitting an operator on the disk basis into a Toeplitz part
// sum_n f_n w^n (negative n meaning (w*)^|n|) and a residual expressed in the
// frame w^j (1 - w w*) (w*)^k = |j+1><k+1|.

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qsphere/banded_op.hpp"

namespace qsphere {

struct DecayFit {
    double rate = 0.0;      // r in |x_s| <= C r^s; 0 when fewer than two points survive
    double constant = 0.0;  // C
    int points = 0;         // samples above the noise floor
    bool rapid() const { return rate < 1.0; }
};

/// Least-squares fit of log|x_s| against s over samples above `floor`.
/// The constant is the smallest C with |x_s| <= C r^s on those samples.
DecayFit fit_geometric_decay(const std::vector<double>& values, double floor);

struct SmoothDecomposition {
    std::map<int, double> fourier;        // n -> f_n, zeros omitted
    Eigen::MatrixXd residual;             // f_{jk}, 0 <= j, k < window
    int window = 0;                       // valid level of the input
    std::vector<int> unstable_diagonals;  // shifts whose tail did not settle
    DecayFit residual_decay;              // over antidiagonals j + k
    double reconstruction_error = 0.0;

    bool in_smooth_algebra() const { return unstable_diagonals.empty() && residual_decay.rapid(); }
};

/// Requires a single-copy disk basis. Diagonals are read on the valid window;
/// f_n is the last entry once the final 10% (at least 3 entries) agree to `tol`.
SmoothDecomposition smooth_decompose(const BandedOp& t, double tol = 1e-9);

}  // namespace qsphere
