#pragma once

// Truncated orthonormal bases. Every basis vector carries a "level": n for the
// disk basis |n>, and l + 1/2 for the spinor basis |l,m>. Levels are the
// eigenvalues of N and |D|, and truncation keeps levels 1..truncation.
//
// A basis may be replicated into `copies` orthogonal copies (chirality,
// 2x2 amplification); global index = copy * base_dim + local index.

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qsphere {

enum class BasisKind { Disk, Spinor };

/// |l,m> stored as doubled integers: twoL = 2l (odd, positive), twoM = 2m.
struct SpinorLabel {
    int twoL = 1;
    int twoM = 1;

    bool valid() const;
    int level() const { return (twoL + 1) / 2; }
    double l() const { return twoL / 2.0; }
    double m() const { return twoM / 2.0; }
    bool operator==(const SpinorLabel&) const = default;
};

class Basis {
public:
    static std::shared_ptr<const Basis> disk(int n_max, int copies = 1);
    static std::shared_ptr<const Basis> spinor(int levels, int copies = 1);

    std::shared_ptr<const Basis> with_copies(int copies) const;

    BasisKind kind() const { return kind_; }
    int truncation() const { return truncation_; }
    int copies() const { return copies_; }
    int base_dim() const { return static_cast<int>(levels_.size()); }
    int dim() const { return base_dim() * copies_; }

    int level(int index) const { return levels_[static_cast<std::size_t>(index % base_dim())]; }
    int copy(int index) const { return index / base_dim(); }
    int local(int index) const { return index % base_dim(); }
    int index(int copy, int local) const { return copy * base_dim() + local; }

    /// Local indices of level lambda are [level_begin(lambda), level_end(lambda)).
    int level_begin(int lambda) const;
    int level_end(int lambda) const;

    /// Disk: local index of |n>, or nullopt outside 1..truncation.
    std::optional<int> disk_local(int n) const;
    std::optional<int> spinor_local(SpinorLabel label) const;
    SpinorLabel spinor_label(int local) const;

    std::string describe() const;

    bool same_space(const Basis& other) const {
        return kind_ == other.kind_ && truncation_ == other.truncation_ && copies_ == other.copies_;
    }

private:
    Basis(BasisKind kind, int truncation, int copies);

    BasisKind kind_;
    int truncation_;
    int copies_;
    std::vector<int> levels_;
};

using BasisPtr = std::shared_ptr<const Basis>;

}  // namespace qsphere
