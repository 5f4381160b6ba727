#include "qsphere/index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qsphere {

double ProjectorOp::idempotency_defect() const { return max_abs_diff(op * op, op); }

double ProjectorOp::symmetry_defect() const { return max_abs_diff(op.adjoint(), op); }

ProjectorOp projector_p(const Representation& r) {
    if (!(r.q() > 0.0 && r.q() < 1.0)) throw std::domain_error("projector_p needs q in (0,1)");
    const BandedOp a = r.generator(Letter::A);
    const BandedOp b = r.generator(Letter::B);
    if (b.bands() != std::set<int>{0} || SparseMatrix(b.matrix()).nonZeros() != b.dim())
        throw std::invalid_argument("projector_p needs a representation with diagonal b, got " + r.name());
    const SparseMatrix& bm = b.matrix();
    for (int k = 0; k < bm.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(bm, k); it; ++it)
            if (it.row() != it.col()) throw std::invalid_argument("projector_p: b is not diagonal in " + r.name());
    const BandedOp inv = BandedOp::diagonal(b.basis(), [&](int i) {
        const double bi = bm.coeff(i, i);
        return 1.0 / (1.0 - bi * bi);
    });
    BandedOp p = BandedOp::identity(a.basis()) - a * inv * a.adjoint();
    return {std::move(p), "p = 1 - a (a* a)^-1 a* in " + r.name()};
}

ProjectorOp projector_pprime(const Representation& r) { return {r.represent(bott_projector()), "p' in " + r.name()}; }

ProjectorOp fundamental_projector(const BasisPtr& basis) {
    if (basis->kind() != BasisKind::Disk || basis->copies() < 2)
        throw std::invalid_argument("fundamental projector lives on two disk copies");
    BandedOp p = BandedOp::from_triplets(basis, {Triplet(0, 0, 1.0)}, {0}, basis->truncation());
    return {std::move(p), "|1><1| (+) 0"};
}

TraceEstimate stabilized_trace(const BandedOp& t, int levels, double tol, const BandedOp* scale) {
    const Basis& b = *t.basis();
    if (!scale) scale = &t;
    levels = std::min(levels, b.truncation());
    TraceEstimate e;
    e.per_level.assign(static_cast<std::size_t>(levels), 0.0);
    std::vector<double> size(static_cast<std::size_t>(levels), 0.0);
    for (int i = 0; i < b.dim(); ++i) {
        if (b.level(i) > levels) continue;
        const auto k = static_cast<std::size_t>(b.level(i) - 1);
        e.per_level[k] += t.matrix().coeff(i, i);
        size[k] += std::abs(scale->matrix().coeff(i, i));
    }
    std::vector<double> signal(e.per_level.size(), 0.0);
    for (std::size_t k = 0; k < e.per_level.size(); ++k) {
        e.value += e.per_level[k];
        const double floor = 256.0 * std::numeric_limits<double>::epsilon() * size[k];
        e.rounding_bound += floor;
        if (std::abs(e.per_level[k]) > floor) signal[k] = e.per_level[k];
    }
    e.decay = fit_geometric_decay(signal, 0.0);
    if (e.decay.rapid()) {
        e.tail_bound = e.decay.constant * std::pow(e.decay.rate, levels) / (1.0 - e.decay.rate);
    } else {
        e.tail_bound = INFINITY;
    }
    e.stable = e.decay.rapid() && e.tail_bound <= tol;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%d levels, decay rate %.4g, tail bound %.3g, rounding bound %.3g", levels,
                  e.decay.rate, e.tail_bound, e.rounding_bound);
    e.detail = buf;
    if (!e.stable) e.detail += "; trace not stabilized at this truncation";
    return e;
}

TraceEstimate chern0(const BandedOp& x, const BandedOp& f, const BandedOp& gamma, double tol) {
    if (!x.basis()->same_space(*f.basis()) || !x.basis()->same_space(*gamma.basis()))
        throw std::invalid_argument("chern0: F, gamma and x live on different bases");
    const BandedOp y = 0.5 * (gamma * f * commutator(f, x));
    return stabilized_trace(y, y.valid_level(), tol, &x);
}

TraceEstimate chern0(const BandedOp& x, const DiracSpec& spec, double tol) {
    return chern0(x, spec.sign(x.basis()), spec.grading(x.basis()), tol);
}

BandedOp perturbed_sign(const BandedOp& f, int level) {
    const Basis* b = f.basis().get();
    const BandedOp s = BandedOp::diagonal(f.basis(), [b, level](int i) { return b->level(i) == level ? -1.0 : 1.0; });
    return f * s;
}

IndexResult fredholm_index(const ProjectorOp& p, const BandedOp& f, const BandedOp& gamma, double tol) {
    const Basis& b = *p.op.basis();
    if (!b.same_space(*f.basis()) || !b.same_space(*gamma.basis()))
        throw std::invalid_argument("fredholm_index: F, gamma and P live on different bases");
    const int window = p.op.valid_level();
    const int interior = window - std::max(1, p.op.band_radius());
    std::vector<int> plus, minus;
    for (int i = 0; i < b.dim(); ++i) {
        if (b.level(i) > window) continue;
        (gamma.matrix().coeff(i, i) > 0 ? plus : minus).push_back(i);
    }
    if (plus.size() + minus.size() > 8000)
        throw std::invalid_argument("fredholm_index: " + std::to_string(plus.size() + minus.size()) +
                                    " states exceed the dense eigensolver limit of 8000");
    const Eigen::MatrixXd pd = p.op.dense();
    const Eigen::MatrixXd fd = f.dense();
    auto sub = [](const Eigen::MatrixXd& m, const std::vector<int>& rows, const std::vector<int>& cols) {
        Eigen::MatrixXd s(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(rows[r], cols[c]);
        return s;
    };
    if (sub(pd, plus, minus).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("fredholm_index: projector mixes chiralities");

    IndexResult res;
    int interior_edge = 0;
    auto range_basis = [&](const std::vector<int>& idx) {
        Eigen::MatrixXd block = sub(pd, idx, idx);
        block = 0.5 * (block + block.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
        std::vector<Eigen::Index> keep;
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const double ev = es.eigenvalues()(k);
            if (std::abs(ev - 1.0) <= tol) {
                keep.push_back(k);
            } else if (std::abs(ev) > tol) {
                ++res.edge_modes;
                double weight = 0.0;
                for (std::size_t r = 0; r < idx.size(); ++r)
                    if (b.level(idx[r]) <= interior) weight += std::pow(es.eigenvectors()(static_cast<Eigen::Index>(r), k), 2);
                if (weight > 1e-6) ++interior_edge;
            }
        }
        Eigen::MatrixXd q(idx.size(), keep.size());
        for (std::size_t c = 0; c < keep.size(); ++c) q.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
        return q;
    };
    const Eigen::MatrixXd qp = range_basis(plus);
    const Eigen::MatrixXd qm = range_basis(minus);
    res.range_plus = static_cast<int>(qp.cols());
    res.range_minus = static_cast<int>(qm.cols());

    const Eigen::MatrixXd m = qm.transpose() * sub(fd, minus, plus) * qp;
    int rank = 0;
    res.smallest_retained = INFINITY;
    res.largest_discarded = 0.0;
    if (m.size() > 0) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
        for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
            const double s = svd.singularValues()(k);
            if (s > tol) {
                ++rank;
                res.smallest_retained = std::min(res.smallest_retained, s);
            } else {
                res.largest_discarded = std::max(res.largest_discarded, s);
            }
        }
    }
    res.dim_kernel = res.range_plus - rank;
    res.dim_cokernel = res.range_minus - rank;
    res.index = res.dim_kernel - res.dim_cokernel;
    res.gap_ratio = res.smallest_retained / std::max(res.largest_discarded, tol);
    res.conclusive = res.gap_ratio >= 10.0 && interior_edge == 0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "ker %d, coker %d, ranges %d/%d, smallest retained sv %.6g, largest discarded sv %.3g, gap %.3g, "
                  "edge modes %d (%d inside window %d)",
                  res.dim_kernel, res.dim_cokernel, res.range_plus, res.range_minus, res.smallest_retained,
                  res.largest_discarded, res.gap_ratio, res.edge_modes, interior_edge, interior);
    res.detail = buf;
    if (res.gap_ratio < 10.0) res.detail += "; no spectral gap";
    if (interior_edge > 0) res.detail += "; truncation edge modes reach the interior";
    return res;
}

IndexResult fredholm_index(const ProjectorOp& p, const DiracSpec& spec, double tol) {
    return fredholm_index(p, spec.sign(p.op.basis()), spec.grading(p.op.basis()), tol);
}

double series_f_term(int n, double x) {
    const double x2n = std::pow(x, 2 * n);
    const double num = 2.0 * n * (1 - x) * (1 - x) * (1 + x2n) - (1 - x * x) * (1 - x2n);
    return num * std::pow(x, n - 1) / ((1 - std::pow(x, 2 * n + 1)) * (1 - std::pow(x, 2 * n - 1)));
}

double series_f_tail(int n, double x) {
    const double xn = std::pow(x, n);
    return 4.0 * ((n + 1) * xn - n * xn * x) / ((1 - x) * (1 - x)) + 2.0 * xn / (1 - x);
}

SeriesF series_f(double x, double tol) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("series_f needs x in [0,1)");
    SeriesF s;
    s.x = x;
    double sum = 0.0;
    int n = 0;
    do {
        ++n;
        sum += series_f_term(n, x);
        s.partial_sums.push_back(sum);
    } while (series_f_tail(n, x) >= tol);
    s.value = sum;
    s.n_used = n;
    s.tail_bound = series_f_tail(n, x);
    return s;
}

Phi0Result phi0(const BandedOp& x, const DiracSpec& spec, double tol) {
    const BandedOp y = spec.grading(x.basis()) * x;
    Phi0Result r;
    r.trace = stabilized_trace(y, y.valid_level(), tol, &x);
    if (r.trace.stable) r.value = r.trace.value;
    return r;
}

Phi2Result phi2(const BandedOp& a0, const BandedOp& a1, const BandedOp& a2, const DiracSpec& spec) {
    const BasisPtr& b = a0.basis();
    const BandedOp d = spec.dirac(b);
    const BandedOp y = spec.grading(b) * a0 * commutator(d, a1) * commutator(d, a2);
    Phi2Result r;
    r.residue = residues(zeta_series(y, spec));
    // sum (alpha l + beta) l^(-2s-2) = alpha zeta(2s+1) + beta zeta(2s+2), and zeta(2s+1) ~ 1/(2s)
    r.value = r.residue.alpha / 2.0;
    return r;
}

PairingResult pairing(const CocyclePair& cocycle, const ProjectorOp& p, double tol) {
    PairingResult out;
    const Phi0Result f0 = phi0(p.op, cocycle.spec, tol);
    out.detail = "phi0: " + f0.trace.detail;
    if (!f0.value) return out;
    out.phi0 = *f0.value;
    if (cocycle.has_phi2()) {
        const BandedOp shifted = p.op - 0.5 * BandedOp::identity(p.op.basis());
        const Phi2Result f2 = phi2(shifted, p.op, p.op, cocycle.spec);
        out.phi2 = f2.value;
        char buf[128];
        std::snprintf(buf, sizeof buf, "; phi2 %.3g (window deviation %.3g)", f2.value, f2.residue.deviation);
        out.detail += buf;
        if (!f2.residue.stable()) {
            out.detail += "; phi2 window not settled at this truncation";
            return out;
        }
    }
    out.value = out.phi0 - 2.0 * out.phi2;
    out.valid = true;
    return out;
}

}  // namespace qsphere
