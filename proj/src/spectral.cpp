#include "qsphere/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qsphere {

std::string DiracSpec::name() const {
    switch (kind) {
        case TripleKind::NDisk: return "N-disk";
        case TripleKind::AbsDSpinor: return "absD-spinor";
        case TripleKind::DPrimeMu: return "Dprime-mu";
        case TripleKind::DSpin: return "D-spin";
    }
    return "?";
}

BasisKind DiracSpec::basis_kind() const {
    return kind == TripleKind::NDisk || kind == TripleKind::DPrimeMu ? BasisKind::Disk : BasisKind::Spinor;
}

void DiracSpec::check_basis(const Basis& basis) const {
    if (basis.kind() != basis_kind()) throw std::invalid_argument(name() + " triple on a " + basis.describe() + " basis");
    if (graded() && basis.copies() % 2 != 0)
        throw std::invalid_argument(name() + " triple needs an even number of copies, got " + basis.describe());
}

BandedOp DiracSpec::abs_dirac(const BasisPtr& basis) const {
    check_basis(*basis);
    return level_operator(basis);
}

BandedOp DiracSpec::sign(const BasisPtr& basis) const {
    check_basis(*basis);
    return graded() ? chirality_flip(basis) : BandedOp::identity(basis);
}

BandedOp DiracSpec::grading(const BasisPtr& basis) const {
    check_basis(*basis);
    if (!graded()) throw std::logic_error(name() + " triple is not graded");
    return chirality_grading(basis);
}

BandedOp DiracSpec::dirac(const BasisPtr& basis) const { return abs_dirac(basis) * sign(basis); }

Commutators commutators(const BandedOp& t, const DiracSpec& spec) {
    const BasisPtr& b = t.basis();
    return {commutator(spec.dirac(b), t), commutator(spec.abs_dirac(b), t)};
}

int ZetaSeries::valid_count() const { return static_cast<int>(std::count(valid.begin(), valid.end(), true)); }

std::complex<double> ZetaSeries::partial_sum(std::complex<double> s) const {
    std::complex<double> sum = 0.0;
    for (int lambda = 1; lambda <= max_level; ++lambda)
        if (valid[static_cast<std::size_t>(lambda - 1)]) sum += at(lambda) * std::pow(static_cast<double>(lambda), -s);
    return sum;
}

ZetaSeries& ZetaSeries::operator+=(const ZetaSeries& o) {
    if (o.max_level != max_level) throw std::invalid_argument("adding zeta series of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += o.a[i];
        valid[i] = valid[i] && o.valid[i];
    }
    return *this;
}

ZetaSeries zeta_series(const BandedOp& t, const DiracSpec& spec) {
    const Basis& basis = *t.basis();
    spec.check_basis(basis);
    if (t.valid_level() < 1) throw TruncationError("zeta_series: empty valid window");
    ZetaSeries z;
    z.max_level = basis.truncation();
    z.a.assign(static_cast<std::size_t>(z.max_level), 0.0);
    z.valid.assign(static_cast<std::size_t>(z.max_level), false);
    for (int i = 0; i < basis.dim(); ++i) z.a[static_cast<std::size_t>(basis.level(i) - 1)] += t.matrix().coeff(i, i);
    for (int lambda = 1; lambda <= std::min(t.valid_level(), z.max_level); ++lambda)
        z.valid[static_cast<std::size_t>(lambda - 1)] = true;
    return z;
}

ResidueEstimate residues(const ZetaSeries& series) {
    int top = 0;
    for (int lambda = 1; lambda <= series.max_level; ++lambda) {
        if (!series.valid[static_cast<std::size_t>(lambda - 1)]) break;
        top = lambda;
    }
    if (top < 30)
        throw std::invalid_argument("residue estimation needs at least 30 valid levels, have " + std::to_string(top));
    ResidueEstimate e;
    const int width = std::max(3, top / 10);
    e.window_begin = top - width + 1;
    e.window_end = top;
    e.alpha = series.at(top) - series.at(top - 1);
    e.beta = series.at(top) - e.alpha * top;

    double amin = INFINITY, amax = -INFINITY, bmin = INFINITY, bmax = -INFINITY;
    for (int lambda = e.window_begin; lambda < e.window_end; ++lambda) {
        const double al = series.at(lambda + 1) - series.at(lambda);
        const double be = series.at(lambda + 1) - al * (lambda + 1);
        amin = std::min(amin, al), amax = std::max(amax, al);
        bmin = std::min(bmin, be), bmax = std::max(bmax, be);
    }
    e.alpha_spread = amax - amin;
    e.beta_spread = bmax - bmin;
    e.deviation = std::max(e.alpha_spread, e.beta_spread);

    std::vector<double> rem;
    double scale = 1.0;
    for (int lambda = 1; lambda <= top; ++lambda) {
        rem.push_back(series.at(lambda) - (e.alpha * lambda + e.beta));
        scale = std::max(scale, std::abs(series.at(lambda)));
    }
    e.remainder = fit_geometric_decay(rem, 1e-13 * scale);
    if (!e.stable()) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "pole structure outside {1,2} or slow convergence: window deviation %.3g, remainder rate %.3g",
                      e.deviation, e.remainder.rate);
        e.diagnostic = buf;
    }
    return e;
}

Report residue_report(std::string check, std::string triple, double value, double expected, double tol,
                      Provenance provenance, const ResidueEstimate& est) {
    Report r = compare_report(std::move(check), std::move(triple), value, expected, tol, provenance);
    char buf[200];
    std::snprintf(buf, sizeof buf, "window [%d,%d], deviation %.3g, remainder decay rate %.4g", est.window_begin,
                  est.window_end, est.deviation, est.remainder.rate);
    r.detail = buf;
    if (r.status == Status::Pass && !est.stable()) {
        r.status = Status::Warn;
        r.detail += "; " + est.diagnostic;
    }
    return r;
}

Report holomorphy_check(const BandedOp& t, const DiracSpec& spec, double tol) {
    const ResidueEstimate e = residues(zeta_series(t, spec));
    const double worst = std::max(std::abs(e.alpha), std::abs(e.beta));
    Report r = compare_report("holomorphy", spec.name(), worst, 0.0, tol, Provenance::Identity);
    char buf[160];
    std::snprintf(buf, sizeof buf, "alpha %.3g, beta %.3g, remainder rate %.4g over %d points", e.alpha, e.beta,
                  e.remainder.rate, e.remainder.points);
    r.detail = buf;
    if (r.status == Status::Pass && !e.remainder.rapid()) {
        r.status = Status::Fail;
        r.detail += "; diagonal sums do not decay";
    }
    return r;
}

namespace {

double spinor_l_plus_m(const Basis& b, int index) {
    const SpinorLabel lab = b.spinor_label(b.local(index));
    return (lab.twoL + lab.twoM) / 2.0;
}

}  // namespace

BandedOp qq_u(const BasisPtr& basis, double q) {
    if (basis->kind() != BasisKind::Spinor) throw std::invalid_argument("U lives on a spinor basis");
    const Basis* b = basis.get();
    return BandedOp::diagonal(basis, [b, q](int i) { return std::pow(q, spinor_l_plus_m(*b, i)); });
}

BandedOp qq_v(const BasisPtr& basis, double q) {
    if (basis->kind() != BasisKind::Spinor) throw std::invalid_argument("V lives on a spinor basis");
    const Basis* b = basis.get();
    return BandedOp::diagonal(basis, [b, q](int i) {
        const double u = q * std::pow(q, spinor_l_plus_m(*b, i));
        return 1.0 - std::sqrt(1.0 - u * u);
    });
}

Report ideal_qq_bound(const BandedOp& t, double x_norm, double y_norm, double q, const DiracSpec& spec) {
    const Basis& b = *t.basis();
    if (b.kind() != BasisKind::Spinor) throw std::invalid_argument("Q_q bound needs a spinor basis");
    double worst = 0.0;
    for (int i = 0; i < b.dim(); ++i) {
        if (b.level(i) > t.valid_level()) continue;
        const double bound = x_norm * y_norm * std::pow(q, spinor_l_plus_m(b, i));
        worst = std::max(worst, std::abs(t.matrix().coeff(i, i)) / bound);
    }
    const ResidueEstimate e = residues(zeta_series(t, spec));
    Report r;
    r.check = "ideal-Qq-bound";
    r.triple = spec.name();
    r.q = q;
    r.value = worst;
    r.expected = 1.0;
    r.tolerance = 1e-12;
    r.provenance = Provenance::Published;
    const bool diag_ok = worst <= 1.0 + 1e-12;
    const bool pole_ok = std::abs(e.alpha) <= 1e-6;
    r.status = diag_ok && pole_ok ? Status::Pass : Status::Fail;
    char buf[200];
    std::snprintf(buf, sizeof buf, "max |T_ii| / bound = %.6g; residue at s=2 %.3g, at s=1 %.6g", worst, e.alpha,
                  e.beta);
    r.detail = buf;
    return r;
}

RegularityProxy regularity_proxy(const BandedOp& x, const DiracSpec& spec, int kmax) {
    RegularityProxy out;
    const BandedOp absd = spec.abs_dirac(x.basis());
    BandedOp cur = x;
    const int radius = x.band_radius();
    for (int k = 0; k <= kmax; ++k) {
        const int level = cur.valid_level();
        out.norms.push_back(cur.schur_norm(level));
        out.half_norms.push_back(cur.schur_norm(level / 2));
        out.radii.push_back(cur.band_radius());
        if (cur.band_radius() > radius || out.norms.back() > 1.5 * out.half_norms.back() + 1e-12) out.bounded = false;
        // delta preserves bands, and |D| is diagonal so the window does not shrink
        cur = commutator(absd, cur);
    }
    return out;
}

std::string zeta_csv(const ZetaSeries& series) {
    std::string out = "lambda,a_lambda,valid\n";
    for (int lambda = 1; lambda <= series.max_level; ++lambda)
        out += std::to_string(lambda) + "," + format_double(series.at(lambda)) + "," +
               (series.valid[static_cast<std::size_t>(lambda - 1)] ? "1" : "0") + "\n";
    return out;
}

}  // namespace qsphere
