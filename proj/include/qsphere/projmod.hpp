#pragma once

// The module C(S^2_q) p spanned by |n>_0 = a^(n-1) p and |n>_1 = a^(n-1) b p,
// with the inner product that makes a and a* adjoint, and its comparison
// with mu = mu_+ (+) mu_-.

#include <Eigen/Dense>

#include "qsphere/report.hpp"

namespace qsphere {

struct ModuleNorms {
    std::vector<double> c0;  // c0[n-1] = <n|n> in the 0 series
    std::vector<double> c1;
    double c0_0 = 1.0;
    double c1_0 = 0.0;
};

/// Coordinates refer to the unnormalized vectors |n>_s, index s * n_max + (n - 1).
struct ProjectiveModule {
    double q = 0.0;
    int n_max = 0;
    ModuleNorms norms;
    Eigen::MatrixXd a, a_star, b;  // actions, column j = image of basis vector j
    Eigen::MatrixXd gram;          // inner products of the |n>_s
    Eigen::MatrixXd pm_basis;      // columns |1>_+ ... |N>_+, |1>_- ... |N>_-

    int coord(int s, int n) const { return s * n_max + (n - 1); }
};

/// c_n = c_0 prod_{k=1}^{n-1} (1 - q^(4k)) for each series; c1_0 defaults to q^4.
ProjectiveModule build_module(double q, int n_max, double c0_0 = 1.0, double c1_0 = -1.0);

/// Compares the actions in the |n>_pm basis with mu_pm entrywise and checks
/// orthonormality of that basis.
Report verify_equivalence(const ProjectiveModule& m, double tol = 1e-12);

/// max |<u|a v> - <a* u|v>| over basis vectors; zero when a and a* are adjoint.
double adjointness_defect(const ProjectiveModule& m, const Eigen::MatrixXd& x, const Eigen::MatrixXd& x_star);

}  // namespace qsphere
