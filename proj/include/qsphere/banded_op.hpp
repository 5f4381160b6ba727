#pragma once

// Compressed operators P_L T P_L on a truncated basis, with bookkeeping of
// which level shifts may be nonzero ("bands") and up to which level the
// entries agree with the untruncated operator ("valid level").

#include <functional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qsphere/basis.hpp"

namespace qsphere {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using Triplet = Eigen::Triplet<double, int>;

class BandError : public std::logic_error {
    using std::logic_error::logic_error;
};

class TruncationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BandedOp {
public:
    /// Throws BandError if some nonzero entry violates the band set.
    BandedOp(BasisPtr basis, SparseMatrix matrix, std::set<int> bands, int valid_level);

    static BandedOp zero(BasisPtr basis);
    static BandedOp identity(BasisPtr basis);
    static BandedOp diagonal(BasisPtr basis, const std::function<double(int index)>& value);
    static BandedOp from_triplets(BasisPtr basis, const std::vector<Triplet>& entries, std::set<int> bands,
                                  int valid_level);

    const BasisPtr& basis() const { return basis_; }
    const SparseMatrix& matrix() const { return m_; }
    const std::set<int>& bands() const { return bands_; }
    int valid_level() const { return valid_; }
    int band_radius() const;
    int dim() const { return basis_->dim(); }

    double entry(int row, int col) const { return m_.coeff(row, col); }
    std::vector<double> diagonal_entries() const;
    Eigen::MatrixXd dense() const { return Eigen::MatrixXd(m_); }

    BandedOp adjoint() const;
    BandedOp with_valid_level(int level) const;

    BandedOp& operator+=(const BandedOp& o);
    BandedOp& operator-=(const BandedOp& o);
    BandedOp& operator*=(double s);

    friend BandedOp operator+(BandedOp a, const BandedOp& b) { return a += b; }
    friend BandedOp operator-(BandedOp a, const BandedOp& b) { return a -= b; }
    friend BandedOp operator*(BandedOp a, double s) { return a *= s; }
    friend BandedOp operator*(double s, BandedOp a) { return a *= s; }
    friend BandedOp operator*(const BandedOp& a, const BandedOp& b);
    BandedOp operator-() const { return *this * -1.0; }

    /// max |entry| over rows and columns of level <= level (default: valid level).
    double max_abs(int level = -1) const;

    /// Row/column absolute-sum norm proxy sqrt(max_row * max_col) over rows of level <= level.
    double schur_norm(int level = -1) const;

    std::string describe() const;

private:
    void check_compatible(const BandedOp& o, const char* op) const;
    void check_bands() const;

    BasisPtr basis_;
    SparseMatrix m_;
    std::set<int> bands_;
    int valid_;
};

BandedOp commutator(const BandedOp& a, const BandedOp& b);

/// max |a - b| on indices of level <= level (default: min valid level).
double max_abs_diff(const BandedOp& a, const BandedOp& b, int level = -1);

struct BlockEntry {
    int row_block;
    int col_block;
    const BandedOp* op;
};

/// Places operators on `blocks x blocks` tiles of a basis with `blocks` times
/// more copies. Block (r, c) occupies copies [r * k, (r + 1) * k) x [c * k, ...)
/// where k is the copy count of the tile operators.
BandedOp assemble_blocks(int blocks, const std::vector<BlockEntry>& entries);

BandedOp direct_sum(const BandedOp& a, const BandedOp& b);

/// Acts on copy index c as c -> c ^ 1 (sign operator between chiralities).
BandedOp chirality_flip(BasisPtr basis);

/// +1 on even copies, -1 on odd copies.
BandedOp chirality_grading(BasisPtr basis);

/// Multiplication by the level (N or |D|).
BandedOp level_operator(BasisPtr basis);

/// Coordinate-list text: "row col value" per nonzero, zero-based.
std::string to_coo(const BandedOp& op);

/// Matrix Market coordinate real general, one-based.
std::string to_matrix_market(const BandedOp& op);

}  // namespace qsphere
