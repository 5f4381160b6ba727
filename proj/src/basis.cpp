#include "qsphere/basis.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qsphere {

bool SpinorLabel::valid() const {
    return twoL > 0 && twoL % 2 == 1 && std::abs(twoM) <= twoL && (twoL - twoM) % 2 == 0;
}

Basis::Basis(BasisKind kind, int truncation, int copies)
    : kind_(kind), truncation_(truncation), copies_(copies) {
    if (truncation < 1) throw std::invalid_argument("truncation must be positive");
    if (copies < 1) throw std::invalid_argument("copies must be positive");
    if (kind == BasisKind::Disk) {
        for (int n = 1; n <= truncation; ++n) levels_.push_back(n);
    } else {
        // level lambda = l + 1/2 holds 2l + 1 = 2 lambda states
        for (int lambda = 1; lambda <= truncation; ++lambda) levels_.insert(levels_.end(), 2 * lambda, lambda);
    }
}

std::shared_ptr<const Basis> Basis::disk(int n_max, int copies) {
    return std::shared_ptr<const Basis>(new Basis(BasisKind::Disk, n_max, copies));
}

std::shared_ptr<const Basis> Basis::spinor(int levels, int copies) {
    return std::shared_ptr<const Basis>(new Basis(BasisKind::Spinor, levels, copies));
}

std::shared_ptr<const Basis> Basis::with_copies(int copies) const {
    return std::shared_ptr<const Basis>(new Basis(kind_, truncation_, copies));
}

int Basis::level_begin(int lambda) const {
    return kind_ == BasisKind::Disk ? lambda - 1 : lambda * (lambda - 1);
}

int Basis::level_end(int lambda) const { return level_begin(lambda + 1); }

std::optional<int> Basis::disk_local(int n) const {
    if (kind_ != BasisKind::Disk || n < 1 || n > truncation_) return std::nullopt;
    return n - 1;
}

std::optional<int> Basis::spinor_local(SpinorLabel label) const {
    if (kind_ != BasisKind::Spinor || !label.valid() || label.level() > truncation_) return std::nullopt;
    return level_begin(label.level()) + (label.twoM + label.twoL) / 2;
}

SpinorLabel Basis::spinor_label(int local) const {
    if (kind_ != BasisKind::Spinor) throw std::logic_error("spinor_label on a disk basis");
    const int lambda = levels_[static_cast<std::size_t>(local)];
    const int offset = local - level_begin(lambda);
    const int twoL = 2 * lambda - 1;
    return {twoL, 2 * offset - twoL};
}

std::string Basis::describe() const {
    std::string s = kind_ == BasisKind::Disk ? "disk(N=" : "spinor(L=";
    s += std::to_string(truncation_) + ")";
    if (copies_ > 1) s += "x" + std::to_string(copies_);
    return s;
}

}  // namespace qsphere
