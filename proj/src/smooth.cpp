#include "qsphere/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsphere {

DecayFit fit_geometric_decay(const std::vector<double>& values, double floor) {
    std::vector<double> xs, ys;
    for (std::size_t s = 0; s < values.size(); ++s) {
        const double v = std::abs(values[s]);
        if (v > floor) {
            xs.push_back(static_cast<double>(s));
            ys.push_back(std::log(v));
        }
    }
    DecayFit fit;
    fit.points = static_cast<int>(xs.size());
    if (xs.size() < 2) {
        fit.rate = 0.0;
        fit.constant = xs.empty() ? 0.0 : std::exp(ys.front());
        return fit;
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    fit.rate = std::exp(slope);
    double logc = -INFINITY;
    for (std::size_t i = 0; i < xs.size(); ++i) logc = std::max(logc, ys[i] - slope * xs[i]);
    fit.constant = std::exp(logc);
    return fit;
}

SmoothDecomposition smooth_decompose(const BandedOp& t, double tol) {
    const Basis& basis = *t.basis();
    if (basis.kind() != BasisKind::Disk || basis.copies() != 1)
        throw std::invalid_argument("smooth_decompose needs a single-copy disk basis");
    SmoothDecomposition out;
    const int w = t.valid_level();
    if (w < 1) throw TruncationError("smooth_decompose: empty valid window");
    out.window = w;
    const Eigen::MatrixXd dense = Eigen::MatrixXd(t.matrix()).topLeftCorner(w, w);

    Eigen::MatrixXd toeplitz = Eigen::MatrixXd::Zero(w, w);
    for (int n : t.bands()) {
        const int len = w - std::abs(n);
        if (len <= 0) continue;
        auto at = [&](int k) { return n >= 0 ? dense(k + n, k) : dense(k, k - n); };
        const int tail = std::max(3, len / 10);
        if (len < tail) {
            out.unstable_diagonals.push_back(n);
            continue;
        }
        double lo = INFINITY, hi = -INFINITY;
        for (int k = len - tail; k < len; ++k) lo = std::min(lo, at(k)), hi = std::max(hi, at(k));
        if (hi - lo > tol) {
            out.unstable_diagonals.push_back(n);
            continue;
        }
        double f = at(len - 1);
        if (std::abs(f) <= tol) f = 0.0;
        if (f == 0.0) continue;
        out.fourier[n] = f;
        for (int k = 0; k < len; ++k) (n >= 0 ? toeplitz(k + n, k) : toeplitz(k, k - n)) = f;
    }
    out.residual = dense - toeplitz;

    std::vector<double> anti(static_cast<std::size_t>(2 * w - 1), 0.0);
    for (int j = 0; j < w; ++j)
        for (int k = 0; k < w; ++k) {
            auto& slot = anti[static_cast<std::size_t>(j + k)];
            slot = std::max(slot, std::abs(out.residual(j, k)));
        }
    const double scale = std::max(1.0, dense.cwiseAbs().maxCoeff());
    out.residual_decay = fit_geometric_decay(anti, 1e-13 * scale);

    // rebuild from the two parts through the frame |j+1><k+1|
    Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(w, w);
    for (const auto& [n, f] : out.fourier)
        for (int k = 0; k + std::abs(n) < w; ++k) (n >= 0 ? rebuilt(k + n, k) : rebuilt(k, k - n)) += f;
    rebuilt += out.residual;
    out.reconstruction_error = (rebuilt - dense).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace qsphere
