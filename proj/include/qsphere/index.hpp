#pragma once

// Projectors, the Fredholm-module Chern character ch_0 = 1/2 Trace(gamma F [F, x]),
// Fredholm indices of compressed sign operators, and the (phi_0, phi_2) cocycle.

#include <optional>
#include <string>
#include <vector>

#include "qsphere/representation.hpp"
#include "qsphere/spectral.hpp"

namespace qsphere {

struct ProjectorOp {
    BandedOp op;
    std::string source;

    double idempotency_defect() const;  // max |P^2 - P| on the valid window
    double symmetry_defect() const;     // max |P* - P| on the valid window
};

/// p = 1 - a (1 - b^2)^-1 a*; needs a representation where b is diagonal.
ProjectorOp projector_p(const Representation& r);

/// The 2x2 projector 1/2 [[1 + b, a*], [a, 1 - q^-2 b]] represented in r.
ProjectorOp projector_pprime(const Representation& r);

/// |1><1| (+) 0 on a two-copy disk basis, amplified to `copies` if larger
/// (placed in the first matrix slot).
ProjectorOp fundamental_projector(const BasisPtr& basis);

struct TraceEstimate {
    double value = 0.0;
    std::vector<double> per_level;  // contributions by eigenvalue of |D|
    DecayFit decay;
    double tail_bound = 0.0;      // geometric extrapolation beyond the window
    double rounding_bound = 0.0;  // sum of the per-level noise floors
    bool stable = false;
    std::string detail;
};

/// Sums per-level contributions up to `levels` and bounds the tail by a
/// geometric fit; stable iff the fit decays and the tail is below tol.
/// Per-level sums below 256 eps sum|scale_ii| are rounding noise and are left
/// out of the fit; `scale` defaults to t itself.
TraceEstimate stabilized_trace(const BandedOp& t, int levels, double tol, const BandedOp* scale = nullptr);

/// 1/2 Trace(gamma F [F, x]) with F and gamma of the (graded) triple.
TraceEstimate chern0(const BandedOp& x, const DiracSpec& spec, double tol = 1e-10);
/// Same with an explicit sign operator (finite-rank perturbations).
TraceEstimate chern0(const BandedOp& x, const BandedOp& f, const BandedOp& gamma, double tol = 1e-10);

struct IndexResult {
    int index = 0;
    int dim_kernel = 0;
    int dim_cokernel = 0;
    int range_plus = 0;
    int range_minus = 0;
    int edge_modes = 0;
    double smallest_retained = 0.0;
    double largest_discarded = 0.0;
    double gap_ratio = 0.0;
    bool conclusive = false;
    std::string detail;
};

/// Index of F_P = P_- F P_+ between the ranges of P on the two chiralities.
/// Ranges come from eigenvectors of the chirality blocks of P with eigenvalue
/// within tol of 1; eigenvalues away from both 0 and 1 are truncation edge
/// modes and must live outside the interior window. Kernels are counted by
/// singular values below tol; a gap ratio below 10 is inconclusive.
IndexResult fredholm_index(const ProjectorOp& p, const BandedOp& f, const BandedOp& gamma, double tol = 1e-8);
IndexResult fredholm_index(const ProjectorOp& p, const DiracSpec& spec, double tol = 1e-8);

/// Sign flip of F on every basis vector of level `level` (finite rank).
BandedOp perturbed_sign(const BandedOp& f, int level = 1);

struct SeriesF {
    double x = 0.0;
    double value = 0.0;
    int n_used = 0;
    double tail_bound = 0.0;
    std::vector<double> partial_sums;
};

double series_f_term(int n, double x);
/// Closed form of sum_{k > n} (4k + 2) x^(k-1).
double series_f_tail(int n, double x);
/// Sums f_n(x) until the tail bound drops below tol; x must lie in [0, 1).
SeriesF series_f(double x, double tol = 1e-12);

struct Phi0Result {
    std::optional<double> value;  // withheld when the trace sequence does not decay
    TraceEstimate trace;
};

/// psi(0) = Trace(gamma x) after checking that the graded diagonal sums decay.
Phi0Result phi0(const BandedOp& x, const DiracSpec& spec, double tol = 1e-10);

struct Phi2Result {
    double value = 0.0;
    ResidueEstimate residue;
};

/// Res_{s=0} Trace(gamma a0 [D,a1][D,a2] |D|^(-2(s+1))) = alpha / 2 where
/// alpha is the linear growth of the graded diagonal sums.
Phi2Result phi2(const BandedOp& a0, const BandedOp& a1, const BandedOp& a2, const DiracSpec& spec);

struct CocyclePair {
    DiracSpec spec;
    /// The mu triple's cocycle has only phi_0.
    bool has_phi2() const { return spec.kind == TripleKind::DSpin; }
};

struct PairingResult {
    double value = 0.0;
    double phi0 = 0.0;
    double phi2 = 0.0;
    bool valid = false;
    std::string detail;
};

/// phi_0(P) - 2 phi_2(P - 1/2, P, P); tol is the trace stabilization tolerance.
PairingResult pairing(const CocyclePair& cocycle, const ProjectorOp& p, double tol = 1e-10);

}  // namespace qsphere
