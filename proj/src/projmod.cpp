#include "qsphere/projmod.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qsphere/representation.hpp"

namespace qsphere {

ProjectiveModule build_module(double q, int n_max, double c0_0, double c1_0) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0,1)");
    if (n_max < 4) throw std::invalid_argument("module truncation must be at least 4");
    if (c1_0 < 0.0) c1_0 = std::pow(q, 4);
    if (!(c0_0 > 0.0 && c1_0 > 0.0)) throw std::invalid_argument("normalizations must be positive");

    ProjectiveModule m;
    m.q = q;
    m.n_max = n_max;
    m.norms.c0_0 = c0_0;
    m.norms.c1_0 = c1_0;
    m.norms.c0.push_back(c0_0);
    m.norms.c1.push_back(c1_0);
    for (int n = 1; n < n_max; ++n) {
        const double f = 1.0 - std::pow(q, 4 * n);
        m.norms.c0.push_back(f * m.norms.c0.back());
        m.norms.c1.push_back(f * m.norms.c1.back());
    }

    const int d = 2 * n_max;
    m.a = m.a_star = m.b = m.gram = Eigen::MatrixXd::Zero(d, d);
    for (int s = 0; s < 2; ++s) {
        const auto& c = s == 0 ? m.norms.c0 : m.norms.c1;
        for (int n = 1; n <= n_max; ++n) {
            const int j = m.coord(s, n);
            m.gram(j, j) = c[static_cast<std::size_t>(n - 1)];
            if (n < n_max) m.a(m.coord(s, n + 1), j) = 1.0;
            if (n > 1) m.a_star(m.coord(s, n - 1), j) = 1.0 - std::pow(q, 4 * (n - 1));
        }
    }
    for (int n = 1; n <= n_max; ++n) {
        m.b(m.coord(1, n), m.coord(0, n)) = std::pow(q, 2 * (n - 1));
        m.b(m.coord(0, n), m.coord(1, n)) = std::pow(q, 2 * (n + 1));
    }

    m.pm_basis = Eigen::MatrixXd::Zero(d, d);
    for (int n = 1; n <= n_max; ++n) {
        const double u0 = 1.0 / std::sqrt(2.0 * m.norms.c0[static_cast<std::size_t>(n - 1)]);
        const double u1 = 1.0 / std::sqrt(2.0 * m.norms.c1[static_cast<std::size_t>(n - 1)]);
        m.pm_basis(m.coord(0, n), n - 1) = u0;
        m.pm_basis(m.coord(1, n), n - 1) = u1;
        m.pm_basis(m.coord(0, n), n_max + n - 1) = u0;
        m.pm_basis(m.coord(1, n), n_max + n - 1) = -u1;
    }
    return m;
}

double adjointness_defect(const ProjectiveModule& m, const Eigen::MatrixXd& x, const Eigen::MatrixXd& x_star) {
    // <u|x v> = (G x)_{uv} and <x* u|v> = (G x*)_{vu}
    return ((m.gram * x) - (m.gram * x_star).transpose()).cwiseAbs().maxCoeff();
}

Report verify_equivalence(const ProjectiveModule& m, double tol) {
    const int n = m.n_max;
    const Eigen::MatrixXd& u = m.pm_basis;
    const Eigen::MatrixXd g = u.transpose() * m.gram * u;
    const Eigen::MatrixXd ma = u.transpose() * m.gram * m.a * u;
    const Eigen::MatrixXd mas = u.transpose() * m.gram * m.a_star * u;
    const Eigen::MatrixXd mb = u.transpose() * m.gram * m.b * u;

    const GeneratorImages plus = build_disk_rep(1, m.q, n), minus = build_disk_rep(-1, m.q, n);
    const BandedOp mu_a = direct_sum(*plus.a, *minus.a), mu_b = direct_sum(*plus.b, *minus.b);
    const Eigen::MatrixXd ra = mu_a.dense(), rb = mu_b.dense();

    struct Worst {
        double value = 0.0;
        const char* what = "";
        Eigen::Index row = 0, col = 0;
    } worst;
    auto scan = [&](const Eigen::MatrixXd& diff, const char* what) {
        Eigen::Index r, c;
        const double v = diff.cwiseAbs().maxCoeff(&r, &c);
        if (v > worst.value) worst = {v, what, r, c};
    };
    scan(g - Eigen::MatrixXd::Identity(2 * n, 2 * n), "orthonormality");
    scan(ma - ra, "a");
    scan(mas - ra.transpose(), "a*");
    scan(mb - rb, "b");

    Report r = compare_report("module-equivalence", "Dprime-mu", worst.value, 0.0, tol, Provenance::Oracle);
    r.q = m.q;
    r.truncation = n;
    char buf[200];
    const auto label = [n](Eigen::Index i) {
        return std::to_string(i % n + 1) + (i < n ? "+" : "-");
    };
    std::snprintf(buf, sizeof buf, "c0_0=%.6g c1_0=%.6g; max deviation %.3g in %s at (%s,%s)", m.norms.c0_0,
                  m.norms.c1_0, worst.value, worst.what, label(worst.row).c_str(), label(worst.col).c_str());
    r.detail = buf;
    return r;
}

}  // namespace qsphere
