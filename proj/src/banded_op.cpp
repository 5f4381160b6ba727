#include "qsphere/banded_op.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsphere {

namespace {

void drop_zeros(SparseMatrix& m) {
    m.prune([](int, int, double v) { return v != 0.0; });
}

}  // namespace

BandedOp::BandedOp(BasisPtr basis, SparseMatrix matrix, std::set<int> bands, int valid_level)
    : basis_(std::move(basis)), m_(std::move(matrix)), bands_(std::move(bands)), valid_(valid_level) {
    if (!basis_) throw std::invalid_argument("BandedOp without basis");
    if (m_.rows() != basis_->dim() || m_.cols() != basis_->dim())
        throw std::invalid_argument("BandedOp matrix does not match basis dimension");
    valid_ = std::min(valid_, basis_->truncation());
    m_.makeCompressed();
    drop_zeros(m_);
    check_bands();
}

void BandedOp::check_bands() const {
    for (int k = 0; k < m_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(m_, k); it; ++it) {
            const int shift = basis_->level(static_cast<int>(it.row())) - basis_->level(static_cast<int>(it.col()));
            if (!bands_.count(shift)) {
                throw BandError("entry (" + std::to_string(it.row()) + "," + std::to_string(it.col()) +
                                ") has level shift " + std::to_string(shift) + " outside the band set");
            }
        }
    }
}

BandedOp BandedOp::zero(BasisPtr basis) {
    const int d = basis->dim();
    const int t = basis->truncation();
    return BandedOp(std::move(basis), SparseMatrix(d, d), {}, t);
}

BandedOp BandedOp::identity(BasisPtr basis) {
    return diagonal(std::move(basis), [](int) { return 1.0; });
}

BandedOp BandedOp::diagonal(BasisPtr basis, const std::function<double(int)>& value) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(basis->dim()));
    for (int i = 0; i < basis->dim(); ++i) t.emplace_back(i, i, value(i));
    const int level = basis->truncation();
    return from_triplets(std::move(basis), t, {0}, level);
}

BandedOp BandedOp::from_triplets(BasisPtr basis, const std::vector<Triplet>& entries, std::set<int> bands,
                                 int valid_level) {
    SparseMatrix m(basis->dim(), basis->dim());
    m.setFromTriplets(entries.begin(), entries.end());
    return BandedOp(std::move(basis), std::move(m), std::move(bands), valid_level);
}

int BandedOp::band_radius() const {
    int r = 0;
    for (int b : bands_) r = std::max(r, std::abs(b));
    return r;
}

std::vector<double> BandedOp::diagonal_entries() const {
    std::vector<double> d(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) d[static_cast<std::size_t>(i)] = m_.coeff(i, i);
    return d;
}

BandedOp BandedOp::adjoint() const {
    std::set<int> neg;
    for (int b : bands_) neg.insert(-b);
    return BandedOp(basis_, SparseMatrix(m_.transpose()), std::move(neg), valid_);
}

BandedOp BandedOp::with_valid_level(int level) const {
    BandedOp r = *this;
    r.valid_ = std::min(level, basis_->truncation());
    return r;
}

void BandedOp::check_compatible(const BandedOp& o, const char* op) const {
    if (!basis_->same_space(*o.basis_))
        throw std::invalid_argument(std::string("BandedOp ") + op + ": incompatible bases " + basis_->describe() +
                                    " and " + o.basis_->describe());
}

BandedOp& BandedOp::operator+=(const BandedOp& o) {
    check_compatible(o, "+");
    m_ += o.m_;
    drop_zeros(m_);
    bands_.insert(o.bands_.begin(), o.bands_.end());
    valid_ = std::min(valid_, o.valid_);
    return *this;
}

BandedOp& BandedOp::operator-=(const BandedOp& o) {
    check_compatible(o, "-");
    m_ -= o.m_;
    drop_zeros(m_);
    bands_.insert(o.bands_.begin(), o.bands_.end());
    valid_ = std::min(valid_, o.valid_);
    return *this;
}

BandedOp& BandedOp::operator*=(double s) {
    m_ *= s;
    if (s == 0.0) {
        m_.setZero();
        bands_.clear();
    }
    return *this;
}

BandedOp operator*(const BandedOp& a, const BandedOp& b) {
    a.check_compatible(b, "*");
    std::set<int> bands;
    for (int x : a.bands_)
        for (int y : b.bands_) bands.insert(x + y);
    // Entries of the product at level <= v need intermediate levels up to v + r,
    // where r is the smaller of the two radii.
    const int valid = std::min(a.valid_, b.valid_) - std::min(a.band_radius(), b.band_radius());
    SparseMatrix m = a.m_ * b.m_;
    BandedOp r(a.basis_, std::move(m), std::move(bands), valid);
    return r;
}

double BandedOp::max_abs(int level) const {
    if (level < 0) level = valid_;
    double best = 0.0;
    for (int k = 0; k < m_.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m_, k); it; ++it)
            if (basis_->level(static_cast<int>(it.row())) <= level && basis_->level(static_cast<int>(it.col())) <= level)
                best = std::max(best, std::abs(it.value()));
    return best;
}

double BandedOp::schur_norm(int level) const {
    if (level < 0) level = valid_;
    std::vector<double> row(static_cast<std::size_t>(dim()), 0.0);
    std::vector<double> col(static_cast<std::size_t>(dim()), 0.0);
    for (int k = 0; k < m_.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m_, k); it; ++it) {
            if (basis_->level(static_cast<int>(it.row())) > level || basis_->level(static_cast<int>(it.col())) > level)
                continue;
            row[static_cast<std::size_t>(it.row())] += std::abs(it.value());
            col[static_cast<std::size_t>(it.col())] += std::abs(it.value());
        }
    const double r = row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
    const double c = col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
    return std::sqrt(r * c);
}

std::string BandedOp::describe() const {
    std::ostringstream s;
    s << basis_->describe() << " nnz=" << m_.nonZeros() << " bands={";
    bool first = true;
    for (int b : bands_) {
        s << (first ? "" : ",") << b;
        first = false;
    }
    s << "} valid<=" << valid_;
    return s.str();
}

BandedOp commutator(const BandedOp& a, const BandedOp& b) { return a * b - b * a; }

double max_abs_diff(const BandedOp& a, const BandedOp& b, int level) {
    if (level < 0) level = std::min(a.valid_level(), b.valid_level());
    return (a - b).max_abs(level);
}

BandedOp assemble_blocks(int blocks, const std::vector<BlockEntry>& entries) {
    if (entries.empty()) throw std::invalid_argument("assemble_blocks: no blocks");
    const BasisPtr& tile = entries.front().op->basis();
    BasisPtr target = tile->with_copies(tile->copies() * blocks);
    const int d = tile->dim();
    std::vector<Triplet> t;
    std::set<int> bands;
    int valid = target->truncation();
    for (const auto& e : entries) {
        if (!e.op->basis()->same_space(*tile)) throw std::invalid_argument("assemble_blocks: mixed tile bases");
        if (e.row_block < 0 || e.row_block >= blocks || e.col_block < 0 || e.col_block >= blocks)
            throw std::out_of_range("assemble_blocks: block index");
        const SparseMatrix& m = e.op->matrix();
        for (int k = 0; k < m.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(m, k); it; ++it)
                t.emplace_back(e.row_block * d + static_cast<int>(it.row()), e.col_block * d + static_cast<int>(it.col()),
                               it.value());
        bands.insert(e.op->bands().begin(), e.op->bands().end());
        valid = std::min(valid, e.op->valid_level());
    }
    return BandedOp::from_triplets(target, t, std::move(bands), valid);
}

BandedOp direct_sum(const BandedOp& a, const BandedOp& b) { return assemble_blocks(2, {{0, 0, &a}, {1, 1, &b}}); }

BandedOp chirality_flip(BasisPtr basis) {
    if (basis->copies() % 2 != 0) throw std::invalid_argument("chirality_flip needs an even number of copies");
    std::vector<Triplet> t;
    for (int i = 0; i < basis->dim(); ++i) t.emplace_back(basis->index(basis->copy(i) ^ 1, basis->local(i)), i, 1.0);
    const int level = basis->truncation();
    return BandedOp::from_triplets(std::move(basis), t, {0}, level);
}

BandedOp chirality_grading(BasisPtr basis) {
    if (basis->copies() % 2 != 0) throw std::invalid_argument("chirality_grading needs an even number of copies");
    const Basis* b = basis.get();
    return BandedOp::diagonal(std::move(basis), [b](int i) { return b->copy(i) % 2 == 0 ? 1.0 : -1.0; });
}

BandedOp level_operator(BasisPtr basis) {
    const Basis* b = basis.get();
    return BandedOp::diagonal(std::move(basis), [b](int i) { return static_cast<double>(b->level(i)); });
}

std::string to_coo(const BandedOp& op) {
    std::string out;
    char buf[96];
    const SparseMatrix& m = op.matrix();
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", static_cast<int>(it.row()), static_cast<int>(it.col()),
                          it.value());
            out += buf;
        }
    return out;
}

std::string to_matrix_market(const BandedOp& op) {
    std::string out = "%%MatrixMarket matrix coordinate real general\n";
    out += "% " + op.describe() + "\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d %d %ld\n", op.dim(), op.dim(), static_cast<long>(op.matrix().nonZeros()));
    out += buf;
    const SparseMatrix& m = op.matrix();
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", static_cast<int>(it.row()) + 1, static_cast<int>(it.col()) + 1,
                          it.value());
            out += buf;
        }
    return out;
}

}  // namespace qsphere
