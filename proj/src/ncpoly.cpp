#include "qsphere/ncpoly.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace qsphere {

Alphabet alphabet_of(Letter l) {
    return (l == Letter::W || l == Letter::WStar) ? Alphabet::Disk0 : Alphabet::Sphere;
}

Letter star(Letter l) {
    switch (l) {
        case Letter::A: return Letter::AStar;
        case Letter::AStar: return Letter::A;
        case Letter::B: return Letter::B;
        case Letter::W: return Letter::WStar;
        case Letter::WStar: return Letter::W;
    }
    return l;
}

std::string to_string(Letter l) {
    switch (l) {
        case Letter::A: return "a";
        case Letter::AStar: return "a*";
        case Letter::B: return "b";
        case Letter::W: return "w";
        case Letter::WStar: return "w*";
    }
    return "?";
}

std::string to_string(Alphabet a) { return a == Alphabet::Sphere ? "sphere" : "disk0"; }

Word to_word(const BasisWord& w, Alphabet alphabet) {
    Word out;
    if (alphabet == Alphabet::Sphere) {
        out.insert(out.end(), static_cast<std::size_t>(std::abs(w.first)),
                   w.first >= 0 ? Letter::A : Letter::AStar);
        out.insert(out.end(), static_cast<std::size_t>(w.second), Letter::B);
    } else {
        out.insert(out.end(), static_cast<std::size_t>(w.first), Letter::W);
        out.insert(out.end(), static_cast<std::size_t>(w.second), Letter::WStar);
    }
    return out;
}

int degree(const BasisWord& w, Alphabet alphabet) {
    return alphabet == Alphabet::Sphere ? std::abs(w.first) + w.second : w.first + w.second;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::scalar(Alphabet alphabet, const LaurentQ& c) {
    NCPoly p(alphabet);
    p.add_term({0, 0}, c);
    return p;
}

NCPoly NCPoly::generator(Letter l) {
    NCPoly p(alphabet_of(l));
    switch (l) {
        case Letter::A: p.add_term({1, 0}, 1); break;
        case Letter::AStar: p.add_term({-1, 0}, 1); break;
        case Letter::B: p.add_term({0, 1}, 1); break;
        case Letter::W: p.add_term({1, 0}, 1); break;
        case Letter::WStar: p.add_term({0, 1}, 1); break;
    }
    return p;
}

NCPoly NCPoly::basis(Alphabet alphabet, BasisWord w, const LaurentQ& c) {
    if (w.second < 0 || (alphabet == Alphabet::Disk0 && w.first < 0))
        throw std::invalid_argument("not a basis word");
    NCPoly p(alphabet);
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(BasisWord w, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPoly::require_same_alphabet(const NCPoly& other) const {
    if (alphabet_ != other.alphabet_)
        throw AlphabetError("alphabet mismatch: " + qsphere::to_string(alphabet_) + " vs " +
                            qsphere::to_string(other.alphabet_));
}

LaurentQ NCPoly::coefficient(BasisWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentQ() : it->second;
}

int NCPoly::degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, qsphere::degree(w, alphabet_));
    return d;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    require_same_alphabet(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
    require_same_alphabet(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const LaurentQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff = coeff * c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    r *= LaurentQ(-1);
    return r;
}

namespace {

using WordTerms = std::map<BasisWord, LaurentQ>;

void accumulate(WordTerms& into, BasisWord w, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

// Normal form of (a or a*)^k1 (a or a*)^k2, signed powers as in BasisWord.
WordTerms sphere_power_product(int k1, int k2) {
    if (k1 == 0 || k2 == 0 || (k1 > 0) == (k2 > 0)) return {{{k1 + k2, 0}, LaurentQ(1)}};
    WordTerms out;
    if (k1 > 0) {
        // a^k (a*)^j = a^{k-1} (a*)^{j-1} (1 - q^{-4j} b^2)
        const int j = -k2;
        for (const auto& [w, c] : sphere_power_product(k1 - 1, k2 + 1)) {
            accumulate(out, w, c);
            accumulate(out, {w.first, w.second + 2}, -c.shifted(-4 * j));
        }
    } else {
        // (a*)^i a^j = (a*)^{i-1} a^{j-1} (1 - q^{4(j-1)} b^2)
        const int j = k2;
        for (const auto& [w, c] : sphere_power_product(k1 + 1, k2 - 1)) {
            accumulate(out, w, c);
            accumulate(out, {w.first, w.second + 2}, -c.shifted(4 * (j - 1)));
        }
    }
    return out;
}

WordTerms basis_product(const BasisWord& x, const BasisWord& y, Alphabet alphabet) {
    if (alphabet == Alphabet::Disk0) {
        // w^n1 (w*)^m1 w^n2 (w*)^m2
        if (x.second >= y.first) return {{{x.first, x.second - y.first + y.second}, LaurentQ(1)}};
        return {{{x.first + y.first - x.second, y.second}, LaurentQ(1)}};
    }
    // b^m1 moves through (a or a*)^k2 picking up q^{2 m1 k2}.
    const int shift = 2 * x.second * y.first;
    WordTerms out;
    for (const auto& [w, c] : sphere_power_product(x.first, y.first))
        accumulate(out, {w.first, w.second + x.second + y.second}, c.shifted(shift));
    return out;
}

}  // namespace

NCPoly operator*(const NCPoly& x, const NCPoly& y) {
    x.require_same_alphabet(y);
    NCPoly r(x.alphabet_);
    for (const auto& [wx, cx] : x.terms_)
        for (const auto& [wy, cy] : y.terms_) {
            const LaurentQ c = cx * cy;
            for (const auto& [w, cw] : basis_product(wx, wy, x.alphabet_)) r.add_term(w, c * cw);
        }
    return r;
}

NCPoly multiply(const NCPoly& x, const NCPoly& y) { return x * y; }

NCPoly adjoint(const NCPoly& x) {
    NCPoly r(x.alphabet());
    for (const auto& [w, c] : x.terms()) {
        if (x.alphabet() == Alphabet::Disk0) {
            r += NCPoly::basis(Alphabet::Disk0, {w.second, w.first}, c);
        } else {
            // (X^k b^m)* = b^m X^{-k} = q^{-2mk} X^{-k} b^m
            r += NCPoly::basis(Alphabet::Sphere, {-w.first, w.second}, c.shifted(-2 * w.second * w.first));
        }
    }
    return r;
}

LaurentQ symbol_mean(const NCPoly& x) {
    LaurentQ mean;
    for (const auto& [w, c] : x.terms()) {
        if (x.alphabet() == Alphabet::Sphere) {
            if (w.first == 0 && w.second == 0) mean += c;
        } else if (w.first == w.second) {
            mean += c;
        }
    }
    return mean;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string word;
        auto append = [&word](const std::string& letter, int power) {
            if (power == 0) return;
            if (!word.empty()) word += ' ';
            word += letter;
            if (power > 1) word += "^" + std::to_string(power);
        };
        if (alphabet_ == Alphabet::Sphere) {
            append(w.first >= 0 ? "a" : "a*", std::abs(w.first));
            append("b", w.second);
        } else {
            append("w", w.first);
            append("w*", w.second);
        }
        const bool unit = (c == LaurentQ(1));
        if (word.empty()) os << "(" << c.to_string() << ")";
        else if (unit) os << word;
        else os << "(" << c.to_string() << ") " << word;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Rewriting

Word parse_word(std::string_view text, Alphabet alphabet) {
    Word out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == ' ') continue;
        const bool starred = i + 1 < text.size() && text[i + 1] == '*';
        Letter l;
        if (ch == 'a') l = starred ? Letter::AStar : Letter::A;
        else if (ch == 'b') l = Letter::B;
        else if (ch == 'w') l = starred ? Letter::WStar : Letter::W;
        else throw AlphabetError(std::string("unknown generator '") + ch + "'");
        if (starred) ++i;  // b* = b
        if (alphabet_of(l) != alphabet)
            throw AlphabetError("generator " + to_string(l) + " not in alphabet " + to_string(alphabet));
        out.push_back(l);
    }
    return out;
}

namespace {

struct Replacement {
    Word letters;
    LaurentQ coefficient;
};

// Rules on adjacent pairs; empty result means the pair is irreducible.
std::vector<Replacement> rewrite_pair(Letter x, Letter y) {
    using L = Letter;
    if (x == L::B && y == L::A) return {{{L::A, L::B}, LaurentQ::monomial(2)}};
    if (x == L::B && y == L::AStar) return {{{L::AStar, L::B}, LaurentQ::monomial(-2)}};
    if (x == L::AStar && y == L::A) return {{{}, LaurentQ(1)}, {{L::B, L::B}, LaurentQ(-1)}};
    if (x == L::A && y == L::AStar) return {{{}, LaurentQ(1)}, {{L::B, L::B}, -LaurentQ::monomial(-4)}};
    if (x == L::WStar && y == L::W) return {{{}, LaurentQ(1)}};
    return {};
}

BasisWord to_basis(const Word& w, Alphabet alphabet) {
    BasisWord bw;
    for (Letter l : w) {
        switch (l) {
            case Letter::A: ++bw.first; break;
            case Letter::AStar: --bw.first; break;
            case Letter::B: ++bw.second; break;
            case Letter::W: ++bw.first; break;
            case Letter::WStar: ++bw.second; break;
        }
    }
    (void)alphabet;
    return bw;
}

}  // namespace

NCPoly normal_form(const Word& word, Alphabet alphabet, RewriteStrategy strategy) {
    for (Letter l : word)
        if (alphabet_of(l) != alphabet)
            throw AlphabetError("generator " + to_string(l) + " not in alphabet " + to_string(alphabet));

    std::map<Word, LaurentQ> pending{{word, LaurentQ(1)}};
    NCPoly result(alphabet);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const LaurentQ& c = node.mapped();
        if (c.is_zero()) continue;

        std::size_t redex = w.size();
        std::vector<Replacement> reps;
        if (strategy == RewriteStrategy::LeftmostFirst) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (!(reps = rewrite_pair(w[i], w[i + 1])).empty()) {
                    redex = i;
                    break;
                }
        } else {
            for (std::size_t i = w.size(); i-- > 1;)
                if (!(reps = rewrite_pair(w[i - 1], w[i])).empty()) {
                    redex = i - 1;
                    break;
                }
        }
        if (redex == w.size()) {
            result += NCPoly::basis(alphabet, to_basis(w, alphabet), c);
            continue;
        }
        for (const auto& rep : reps) {
            Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(redex));
            next.insert(next.end(), rep.letters.begin(), rep.letters.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(redex + 2), w.end());
            auto [it, inserted] = pending.try_emplace(std::move(next), c * rep.coefficient);
            if (!inserted) it->second += c * rep.coefficient;
        }
    }
    return result;
}

NCPoly normal_form(std::string_view word, Alphabet alphabet, RewriteStrategy strategy) {
    return normal_form(parse_word(word, alphabet), alphabet, strategy);
}

// ---------------------------------------------------------------------------
// NCMat2

NCMat2::NCMat2(Alphabet alphabet)
    : entries_{NCPoly(alphabet), NCPoly(alphabet), NCPoly(alphabet), NCPoly(alphabet)} {}

NCMat2::NCMat2(NCPoly e00, NCPoly e01, NCPoly e10, NCPoly e11)
    : entries_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)} {
    for (const auto& e : entries_)
        if (e.alphabet() != entries_[0].alphabet()) throw AlphabetError("mixed alphabets in NCMat2");
}

NCMat2 NCMat2::identity(Alphabet alphabet) {
    return {NCPoly::one(alphabet), NCPoly(alphabet), NCPoly(alphabet), NCPoly::one(alphabet)};
}

bool NCMat2::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

NCMat2 operator+(const NCMat2& x, const NCMat2& y) {
    NCMat2 r(x.alphabet());
    for (int i = 0; i < 4; ++i) r.entries_[i] = x.entries_[i] + y.entries_[i];
    return r;
}

NCMat2 operator-(const NCMat2& x, const NCMat2& y) {
    NCMat2 r(x.alphabet());
    for (int i = 0; i < 4; ++i) r.entries_[i] = x.entries_[i] - y.entries_[i];
    return r;
}

NCMat2 operator*(const NCMat2& x, const NCMat2& y) {
    NCMat2 r(x.alphabet());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
}

NCMat2 adjoint(const NCMat2& m) {
    return {adjoint(m(0, 0)), adjoint(m(1, 0)), adjoint(m(0, 1)), adjoint(m(1, 1))};
}

NCMat2 bott_projector() {
    const LaurentQ half(Rational(1, 2));
    const NCPoly one = NCPoly::one(Alphabet::Sphere);
    const NCPoly a = NCPoly::generator(Letter::A);
    const NCPoly as = NCPoly::generator(Letter::AStar);
    const NCPoly b = NCPoly::generator(Letter::B);
    return {half * (one + b), half * as, half * a, half * (one - LaurentQ::monomial(-2) * b)};
}

Report check_projector(const NCMat2& p, const std::string& name) {
    const NCMat2 idem = p * p - p;
    const NCMat2 selfadj = adjoint(p) - p;
    Report r;
    r.check = "symbolic-projector:" + name;
    r.triple = "algebra";
    r.provenance = Provenance::Identity;
    r.status = (idem.is_zero() && selfadj.is_zero()) ? Status::Pass : Status::Fail;
    std::ostringstream detail;
    detail << "P^2-P " << (idem.is_zero() ? "= 0" : "!= 0") << "; P*-P "
           << (selfadj.is_zero() ? "= 0" : "!= 0");
    if (!idem.is_zero()) detail << "; (P^2-P)_00 = " << idem(0, 0).to_string();
    r.detail = detail.str();
    return r;
}

}  // namespace qsphere
