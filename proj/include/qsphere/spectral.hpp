#pragma once

// Dirac operators of the four triples, zeta-type series Trace(T |D|^-s)
// grouped by eigenvalue, and residue extraction at s = 1 and s = 2.

#include <complex>
#include <string>
#include <vector>

#include "qsphere/banded_op.hpp"
#include "qsphere/report.hpp"
#include "qsphere/smooth.hpp"

namespace qsphere {

enum class TripleKind {
    NDisk,       // disk basis, D = N
    AbsDSpinor,  // spinor basis, D = |D|
    DPrimeMu,    // two disk copies, D' = N (x) [[0,1],[1,0]], graded
    DSpin,       // two spinor copies, D = |D| (x) F, graded
};

struct DiracSpec {
    TripleKind kind;

    static DiracSpec n_disk() { return {TripleKind::NDisk}; }
    static DiracSpec abs_d_spinor() { return {TripleKind::AbsDSpinor}; }
    static DiracSpec d_prime_mu() { return {TripleKind::DPrimeMu}; }
    static DiracSpec d_spin() { return {TripleKind::DSpin}; }

    std::string name() const;
    bool graded() const { return kind == TripleKind::DPrimeMu || kind == TripleKind::DSpin; }
    BasisKind basis_kind() const;

    /// Throws std::invalid_argument if the basis cannot carry this triple.
    void check_basis(const Basis& basis) const;

    BandedOp abs_dirac(const BasisPtr& basis) const;
    /// Sign of D: identity for ungraded triples, chirality flip otherwise.
    BandedOp sign(const BasisPtr& basis) const;
    /// Throws std::logic_error for ungraded triples.
    BandedOp grading(const BasisPtr& basis) const;
    BandedOp dirac(const BasisPtr& basis) const;
};

struct Commutators {
    BandedOp partial;  // [D, T]
    BandedOp delta;    // [|D|, T]
};

Commutators commutators(const BandedOp& t, const DiracSpec& spec);

struct ZetaSeries {
    std::vector<double> a;     // a[lambda - 1]
    std::vector<bool> valid;   // valid[lambda - 1]
    int max_level = 0;

    int valid_count() const;
    double at(int lambda) const { return a[static_cast<std::size_t>(lambda - 1)]; }
    /// sum over valid lambda of a_lambda lambda^-s
    std::complex<double> partial_sum(std::complex<double> s) const;

    ZetaSeries& operator+=(const ZetaSeries& o);
};

/// a_lambda = sum of diagonal entries of T over the eigenspace lambda of |D|;
/// levels above the valid level of T are flagged invalid.
ZetaSeries zeta_series(const BandedOp& t, const DiracSpec& spec);

struct ResidueEstimate {
    double alpha = 0.0;  // residue at s = 2
    double beta = 0.0;   // residue at s = 1
    int window_begin = 0;
    int window_end = 0;  // inclusive
    double alpha_spread = 0.0;
    double beta_spread = 0.0;
    double deviation = 0.0;
    DecayFit remainder;  // of a_lambda - (alpha lambda + beta)
    bool stable() const { return deviation <= 1e-6; }
    std::string diagnostic;
};

/// Needs at least 30 valid levels (std::invalid_argument otherwise).
ResidueEstimate residues(const ZetaSeries& series);

/// Pass/warn/fail for a residue compared with an expected value; a pass is
/// demoted to warn when the window deviation exceeds 1e-6.
Report residue_report(std::string check, std::string triple, double value, double expected, double tol,
                      Provenance provenance, const ResidueEstimate& est);

/// Pass iff both residues vanish to `tol` and the series decays geometrically.
Report holomorphy_check(const BandedOp& t, const DiracSpec& spec, double tol = 1e-8);

/// U|l,m> = q^(l+m)|l,m> and V = 1 - sqrt(1 - (qU)^2) on a spinor basis.
BandedOp qq_u(const BasisPtr& basis, double q);
BandedOp qq_v(const BasisPtr& basis, double q);

/// Checks |<l,m|T|l,m>| <= x_norm y_norm q^(l+m) on the valid window and that
/// the residue at s = 2 vanishes.
Report ideal_qq_bound(const BandedOp& t, double x_norm, double y_norm, double q, const DiracSpec& spec);

struct RegularityProxy {
    std::vector<double> norms;       // norm proxy of delta^k(x) on the valid window, k = 0..
    std::vector<double> half_norms;  // same on the lower half of the window
    std::vector<int> radii;
    bool bounded = true;
};

/// delta^k(x) for k <= kmax stays band-limited with a norm proxy that does
/// not grow between half and full window.
RegularityProxy regularity_proxy(const BandedOp& x, const DiracSpec& spec, int kmax = 4);

std::string zeta_csv(const ZetaSeries& series);

}  // namespace qsphere
