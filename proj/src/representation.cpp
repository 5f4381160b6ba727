#include "qsphere/representation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qsphere {

double q_number(double x, double q) { return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q); }

namespace {

// mantissa * q^exponent. Products of q-numbers overflow double for large l
// when evaluated directly, so each [x] is kept as q^(1-x) (1-q^2x)/(1-q^2).
struct Scaled {
    double mantissa;
    double exponent;
};

Scaled qn(double x, double q) { return {(1.0 - std::pow(q, 2.0 * x)) / (1.0 - q * q), 1.0 - x}; }
Scaled operator*(Scaled a, Scaled b) { return {a.mantissa * b.mantissa, a.exponent + b.exponent}; }
Scaled operator/(Scaled a, Scaled b) { return {a.mantissa / b.mantissa, a.exponent - b.exponent}; }
Scaled qpow(double e) { return {1.0, e}; }
Scaled scalar(double v) { return {v, 0.0}; }
Scaled sqrt_of(Scaled a) { return {std::sqrt(std::max(a.mantissa, 0.0)), a.exponent / 2.0}; }
Scaled minus(Scaled a, Scaled b, double q) {
    const double e = std::min(a.exponent, b.exponent);
    return {a.mantissa * std::pow(q, a.exponent - e) - b.mantissa * std::pow(q, b.exponent - e), e};
}
double value(Scaled a, double q) { return a.mantissa == 0.0 ? 0.0 : a.mantissa * std::pow(q, a.exponent); }

void require_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0,1)");
}

// Collects entries |target><source| on the spinor basis, dropping targets
// outside the truncation (compression).
struct SpinorBuilder {
    BasisPtr basis;
    std::vector<Triplet> entries;

    void put(SpinorLabel target, int source, double v) {
        if (v == 0.0) return;
        if (auto t = basis->spinor_local(target)) entries.emplace_back(*t, source, v);
    }
    BandedOp finish(std::set<int> bands) {
        return BandedOp::from_triplets(basis, entries, std::move(bands), basis->truncation());
    }
};

GeneratorImages sphere_images(BandedOp a, BandedOp b) {
    GeneratorImages g;
    g.alphabet = Alphabet::Sphere;
    g.a = std::move(a);
    g.b = std::move(b);
    return g;
}

}  // namespace

const BandedOp& GeneratorImages::image(Letter l) const {
    const std::optional<BandedOp>* slot = nullptr;
    switch (l) {
        case Letter::A:
        case Letter::AStar: slot = &a; break;
        case Letter::B: slot = &b; break;
        case Letter::W:
        case Letter::WStar: slot = &w; break;
    }
    if (!slot || !slot->has_value())
        throw AlphabetError("generator " + to_string(l) + " has no image in this " + to_string(alphabet) + " map");
    return **slot;
}

BasisPtr GeneratorImages::basis() const {
    if (a) return a->basis();
    if (w) return w->basis();
    throw std::logic_error("empty generator map");
}

GeneratorImages build_disk_rep(int sign, double q, int n_max) {
    require_q(q);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (n_max < 4) throw std::invalid_argument("disk truncation must be at least 4");
    BasisPtr basis = Basis::disk(n_max);
    std::vector<Triplet> ta;
    for (int n = 1; n < n_max; ++n) ta.emplace_back(n, n - 1, std::sqrt(1.0 - std::pow(q, 4 * n)));
    BandedOp a = BandedOp::from_triplets(basis, ta, {1}, n_max);
    BandedOp b = BandedOp::diagonal(basis, [&](int i) { return sign * std::pow(q, 2 * (i + 1)); });
    return sphere_images(std::move(a), std::move(b));
}

GeneratorImages build_spin_rep(int sign, double q, int l_levels) {
    require_q(q);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    BasisPtr basis = Basis::spinor(l_levels);
    SpinorBuilder A{basis, {}}, B{basis, {}};
    const double s = sign;
    for (int j = 0; j < basis->base_dim(); ++j) {
        const SpinorLabel lab = basis->spinor_label(j);
        const double l = lab.l(), m = lab.m();
        const int tl = lab.twoL, tm = lab.twoM;

        // a: |l+1,m+1>, |l-1,m+1>, |l,m+1>
        A.put({tl + 2, tm + 2}, j,
              value(qpow(m - l - 0.5) * sqrt_of(qn(l + m + 1, q) * qn(l + m + 2, q)) / qn(2 * l + 2, q), q));
        if (tl > 1)
            A.put({tl - 2, tm + 2}, j,
                  -value(qpow(m + l + 0.5) * sqrt_of(qn(l - m - 1, q) * qn(l - m, q)) / qn(2 * l, q), q));
        A.put({tl, tm + 2}, j,
              s * value(scalar(1 + q * q) * qpow(m - 0.5) * sqrt_of(qn(l + m + 1, q) * qn(l - m, q)) /
                            (qn(2 * l, q) * qn(2 * l + 2, q)),
                        q));

        // b: |l+1,m>, |l-1,m>, |l,m>
        B.put({tl + 2, tm}, j,
              -value(qpow(m + 1) * sqrt_of(qn(l + m + 1, q) * qn(l - m + 1, q)) / qn(2 * l + 2, q), q));
        if (tl > 1)
            B.put({tl - 2, tm}, j, -value(qpow(m + 1) * sqrt_of(qn(l + m, q) * qn(l - m, q)) / qn(2 * l, q), q));
        const Scaled diff = minus(qn(l - m + 1, q) * qn(l + m, q), qpow(2) * qn(l - m, q) * qn(l + m + 1, q), q);
        B.put({tl, tm}, j, s * value(diff / (qn(2 * l, q) * qn(2 * l + 2, q)), q));
    }
    return sphere_images(A.finish({-1, 0, 1}), B.finish({-1, 0, 1}));
}

GeneratorImages build_rho_generators(int sign, double q, int l_levels) {
    require_q(q);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    BasisPtr basis = Basis::spinor(l_levels);
    SpinorBuilder A{basis, {}}, B{basis, {}};
    auto qp = [q](double e) { return std::pow(q, e); };
    auto root = [](double v) { return std::sqrt(std::max(v, 0.0)); };
    for (int j = 0; j < basis->base_dim(); ++j) {
        const SpinorLabel lab = basis->spinor_label(j);
        const double l = lab.l(), m = lab.m();
        const int tl = lab.twoL, tm = lab.twoM;
        if (sign > 0) {
            A.put({tl + 2, tm + 2}, j, root(1 - qp(2 * (l + m + 1))) * root(1 - qp(2 * (l + m + 2))) / (1 - qp(4 * (l + 1))));
            if (tl > 1)
                A.put({tl - 2, tm + 2}, j,
                      -root(qp(2 * (l + m)) - qp(4 * l)) * root(qp(2 * (l + m + 1)) - qp(4 * l)) / (1 - qp(4 * l)));
            B.put({tl + 2, tm}, j,
                  -root(1 - qp(2 * (l + m + 1))) * root(qp(2 * (l + m + 2)) - qp(4 * l + 6)) / (1 - qp(4 * (l + 1))));
            if (tl > 1)
                B.put({tl - 2, tm}, j,
                      -root(1 - qp(2 * (l + m))) * root(qp(2 * (l + m + 1)) - qp(4 * l + 2)) / (1 - qp(4 * l)));
        } else {
            const double den = (1 - qp(4 * l)) * (1 - qp(4 * l + 4));
            A.put({tl, tm + 2}, j,
                  (1 - qp(4)) * qp(3 * l + m) / den * root(1 - qp(2 * (l + m + 1))) * root(1 - qp(2 * (l - m))));
            B.put({tl, tm}, j, (1 - q * q) * qp(2 * l + 1) / den * (1 + qp(4 * l + 2) - (1 + q * q) * qp(2 * (l + m))));
        }
    }
    if (sign > 0) return sphere_images(A.finish({-1, 1}), B.finish({-1, 1}));
    return sphere_images(A.finish({0}), B.finish({0}));
}

GeneratorImages build_lambda(double q, int l_levels) {
    require_q(q);
    BasisPtr basis = Basis::spinor(l_levels);
    SpinorBuilder A{basis, {}}, B{basis, {}};
    auto qp = [q](double e) { return std::pow(q, e); };
    for (int j = 0; j < basis->base_dim(); ++j) {
        const SpinorLabel lab = basis->spinor_label(j);
        const double l = lab.l(), m = lab.m();
        const int tl = lab.twoL, tm = lab.twoM;
        A.put({tl + 2, tm + 2}, j, std::sqrt(1 - qp(2 * (l + m + 1))) * std::sqrt(1 - qp(2 * (l + m + 2))));
        if (tl > 1) A.put({tl - 2, tm + 2}, j, -qp(2 * (l + m) + 1));
        B.put({tl + 2, tm}, j, -qp(l + m + 2) * std::sqrt(1 - qp(2 * (l + m + 1))));
        if (tl > 1) B.put({tl - 2, tm}, j, -qp(l + m + 1) * std::sqrt(1 - qp(2 * (l + m))));
    }
    return sphere_images(A.finish({-1, 1}), B.finish({-1, 1}));
}

GeneratorImages build_nu(int l_levels) {
    BasisPtr basis = Basis::spinor(l_levels);
    SpinorBuilder A{basis, {}};
    for (int j = 0; j < basis->base_dim(); ++j) {
        const SpinorLabel lab = basis->spinor_label(j);
        A.put({lab.twoL + 2, lab.twoM + 2}, j, 1.0);
    }
    return sphere_images(A.finish({1}), BandedOp::zero(basis));
}

GeneratorImages build_fock0(int truncation, Fock0Flavor flavor) {
    GeneratorImages g;
    g.alphabet = Alphabet::Disk0;
    if (flavor == Fock0Flavor::Disk) {
        BasisPtr basis = Basis::disk(truncation);
        std::vector<Triplet> t;
        for (int n = 1; n < truncation; ++n) t.emplace_back(n, n - 1, 1.0);
        g.w = BandedOp::from_triplets(basis, t, {1}, truncation);
    } else {
        BasisPtr basis = Basis::spinor(truncation);
        SpinorBuilder W{basis, {}};
        for (int j = 0; j < basis->base_dim(); ++j) {
            const SpinorLabel lab = basis->spinor_label(j);
            W.put({lab.twoL + 2, lab.twoM + 2}, j, 1.0);
        }
        g.w = W.finish({1});
    }
    return g;
}

double coefficient_value(const LaurentQ& c, Alphabet alphabet, double q) {
    if (alphabet == Alphabet::Disk0) {
        if (!c.is_zero() && (c.min_exponent() != 0 || c.max_exponent() != 0))
            throw AlphabetError("disk algebra coefficients cannot depend on q");
        return c.coefficient(0).get_d();
    }
    return eval_coeff(c, q);
}

Representation::Representation(std::string name, double q, std::vector<Part> parts)
    : name_(std::move(name)), q_(q), parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("representation without parts");
    for (const auto& p : parts_) {
        if (p.images.alphabet != parts_.front().images.alphabet)
            throw std::invalid_argument("representation parts with different alphabets");
        if (!p.images.basis()->same_space(*parts_.front().images.basis()))
            throw std::invalid_argument("representation parts on different bases");
    }
}

Representation Representation::homomorphism(std::string name, double q, GeneratorImages images) {
    return Representation(std::move(name), q, {{1.0, std::move(images)}});
}

BandedOp Representation::generator(Letter l) const {
    if (alphabet_of(l) != alphabet()) throw AlphabetError("generator " + to_string(l) + " not in " + name_);
    BandedOp total = BandedOp::zero(basis());
    for (const auto& p : parts_) {
        BandedOp g = p.images.image(l);
        if (l == Letter::AStar || l == Letter::WStar) g = g.adjoint();
        total += p.weight * g;
    }
    return total;
}

namespace {

class PowerCache {
public:
    explicit PowerCache(const BandedOp& x) { 
        powers_.push_back(BandedOp::identity(x.basis()));
        powers_.push_back(x);
    }
    const BandedOp& get(int k) {
        while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * powers_[1]);
        return powers_[static_cast<std::size_t>(k)];
    }

private:
    std::vector<BandedOp> powers_;
};

}  // namespace

BandedOp Representation::represent(const NCPoly& x) const {
    if (x.alphabet() != alphabet())
        throw AlphabetError("cannot evaluate a " + to_string(x.alphabet()) + " element in " + name_);
    BandedOp total = BandedOp::zero(basis());
    for (const auto& p : parts_) {
        BandedOp acc = BandedOp::zero(basis());
        if (alphabet() == Alphabet::Sphere) {
            const BandedOp& a = p.images.image(Letter::A);
            PowerCache pa(a), pas(a.adjoint()), pb(p.images.image(Letter::B));
            for (const auto& [word, c] : x.terms()) {
                const BandedOp& left = word.first >= 0 ? pa.get(word.first) : pas.get(-word.first);
                acc += coefficient_value(c, alphabet(), q_) * (left * pb.get(word.second));
            }
        } else {
            const BandedOp& w = p.images.image(Letter::W);
            PowerCache pw(w), pws(w.adjoint());
            for (const auto& [word, c] : x.terms())
                acc += coefficient_value(c, alphabet(), q_) * (pw.get(word.first) * pws.get(word.second));
        }
        total += p.weight * acc;
    }
    if (total.valid_level() < 1)
        throw TruncationError("degree " + std::to_string(x.degree()) + " too high for truncation " +
                              std::to_string(basis()->truncation()) + " in " + name_);
    return total;
}

BandedOp Representation::represent_word(const Word& w) const {
    for (Letter l : w)
        if (alphabet_of(l) != alphabet()) throw AlphabetError("letter " + to_string(l) + " not in " + name_);
    BandedOp total = BandedOp::zero(basis());
    for (const auto& p : parts_) {
        BandedOp acc = BandedOp::identity(basis());
        for (Letter l : w) {
            const BandedOp& g = p.images.image(l);
            acc = acc * (l == Letter::AStar || l == Letter::WStar ? g.adjoint() : g);
        }
        total += p.weight * acc;
    }
    if (total.valid_level() < 1)
        throw TruncationError("word of length " + std::to_string(w.size()) + " too long for truncation " +
                              std::to_string(basis()->truncation()) + " in " + name_);
    return total;
}

BandedOp Representation::represent(const NCMat2& m) const {
    const BandedOp e00 = represent(m(0, 0)), e01 = represent(m(0, 1)), e10 = represent(m(1, 0)),
                   e11 = represent(m(1, 1));
    return assemble_blocks(2, {{0, 0, &e00}, {0, 1, &e01}, {1, 0, &e10}, {1, 1, &e11}});
}

namespace {

GeneratorImages sum_images(const GeneratorImages& x, const GeneratorImages& y) {
    GeneratorImages g;
    g.alphabet = x.alphabet;
    if (x.a) g.a = direct_sum(*x.a, *y.a);
    if (x.b) g.b = direct_sum(*x.b, *y.b);
    if (x.w) g.w = direct_sum(*x.w, *y.w);
    return g;
}

}  // namespace

Representation make_representation(std::string_view selector, double q, int truncation) {
    const std::string name(selector);
    if (name == "mu+") return Representation::homomorphism(name, q, build_disk_rep(1, q, truncation));
    if (name == "mu-") return Representation::homomorphism(name, q, build_disk_rep(-1, q, truncation));
    if (name == "mu")
        return Representation::homomorphism(
            name, q, sum_images(build_disk_rep(1, q, truncation), build_disk_rep(-1, q, truncation)));
    if (name == "mu0")
        return Representation(name, q,
                              {{1.0, build_disk_rep(1, q, truncation)}, {-1.0, build_disk_rep(-1, q, truncation)}});
    if (name == "pi+") return Representation::homomorphism(name, q, build_spin_rep(1, q, truncation));
    if (name == "pi-") return Representation::homomorphism(name, q, build_spin_rep(-1, q, truncation));
    if (name == "pi")
        return Representation::homomorphism(
            name, q, sum_images(build_spin_rep(1, q, truncation), build_spin_rep(-1, q, truncation)));
    if (name == "rho+" || name == "rho-") {
        const double s = name == "rho+" ? 0.5 : -0.5;
        return Representation(name, q,
                              {{0.5, build_spin_rep(1, q, truncation)}, {s, build_spin_rep(-1, q, truncation)}});
    }
    if (name == "lambda") return Representation::homomorphism(name, q, build_lambda(q, truncation));
    if (name == "nu") return Representation::homomorphism(name, q, build_nu(truncation));
    if (name == "fock0-disk") return Representation::homomorphism(name, 0.0, build_fock0(truncation, Fock0Flavor::Disk));
    if (name == "fock0-spinor")
        return Representation::homomorphism(name, 0.0, build_fock0(truncation, Fock0Flavor::Spinor));
    throw std::invalid_argument("unknown representation selector '" + name + "'");
}

std::vector<std::string> representation_selectors() {
    return {"mu+", "mu-", "mu", "mu0", "pi+", "pi-", "pi", "rho+", "rho-", "lambda", "nu", "fock0-disk", "fock0-spinor"};
}

}  // namespace qsphere
