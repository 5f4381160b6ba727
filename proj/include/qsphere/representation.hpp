#pragma once

// Truncated realizations of the sphere algebra (generators a, b) and of the
// disk algebra at q = 0 (generator w) as BandedOp matrices.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsphere/banded_op.hpp"
#include "qsphere/ncpoly.hpp"

namespace qsphere {

/// q-number [x] = (q^x - q^-x) / (q - 1/q).
double q_number(double x, double q);

/// Images of the generators under one linear map. Sphere maps carry a and b,
/// disk maps carry w; starred generators are adjoints.
struct GeneratorImages {
    Alphabet alphabet = Alphabet::Sphere;
    std::optional<BandedOp> a;
    std::optional<BandedOp> b;
    std::optional<BandedOp> w;

    const BandedOp& image(Letter l) const;
    BasisPtr basis() const;
};

GeneratorImages build_disk_rep(int sign, double q, int n_max);
GeneratorImages build_spin_rep(int sign, double q, int l_levels);
/// rho_pm generator images from the explicit l-graded formulas.
GeneratorImages build_rho_generators(int sign, double q, int l_levels);
GeneratorImages build_lambda(double q, int l_levels);
GeneratorImages build_nu(int l_levels);

enum class Fock0Flavor { Disk, Spinor };
GeneratorImages build_fock0(int truncation, Fock0Flavor flavor);

/// A weighted sum of homomorphisms: x -> sum_i weight_i * R_i(x). Single
/// parts with weight 1 are representations; rho_pm = (pi_+ +- pi_-)/2 and
/// mu_0 = mu_+ - mu_- are not, but are evaluated exactly this way.
class Representation {
public:
    struct Part {
        double weight;
        GeneratorImages images;
    };

    Representation(std::string name, double q, std::vector<Part> parts);
    static Representation homomorphism(std::string name, double q, GeneratorImages images);

    const std::string& name() const { return name_; }
    double q() const { return q_; }
    Alphabet alphabet() const { return parts_.front().images.alphabet; }
    BasisPtr basis() const { return parts_.front().images.basis(); }
    bool is_homomorphism() const { return parts_.size() == 1 && parts_.front().weight == 1.0; }
    const std::vector<Part>& parts() const { return parts_; }

    BandedOp generator(Letter l) const;

    /// Throws AlphabetError on alphabet mismatch and TruncationError when the
    /// valid window of the result is empty.
    BandedOp represent(const NCPoly& x) const;

    /// Product of generator images letter by letter, without passing through
    /// the normal form (whose q^-4k coefficients cancel badly for small q).
    BandedOp represent_word(const Word& w) const;

    /// 2x2 amplification: block (i, j) is represent(m(i, j)).
    BandedOp represent(const NCMat2& m) const;

private:
    std::string name_;
    double q_;
    std::vector<Part> parts_;
};

/// Selectors: mu+, mu-, mu (= mu+ (+) mu-), mu0, pi+, pi-, pi (= pi+ (+) pi-),
/// rho+, rho-, lambda, nu, fock0-disk, fock0-spinor.
Representation make_representation(std::string_view selector, double q, int truncation);
std::vector<std::string> representation_selectors();

/// Coefficient value at q; disk-algebra coefficients are plain rationals.
double coefficient_value(const LaurentQ& c, Alphabet alphabet, double q);

}  // namespace qsphere
