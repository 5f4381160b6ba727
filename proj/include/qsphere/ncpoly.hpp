#pragma once

// Noncommutative polynomials in the generators of the equatorial Podles sphere
// (a, a*, b with ba = q^2 ab, a*a + b^2 = 1, q^4 aa* + b^2 = q^4) and of its
// q = 0 limit (w, w* with w*w = 1), kept in normal form.
//
// Sphere basis words are a^k b^m (k >= 0) and (a*)^|k| b^m (k < 0).
// Disk0 basis words are w^n (w*)^m.

#include "qsphere/laurent.hpp"
#include "qsphere/report.hpp"

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsphere {

enum class Alphabet { Sphere, Disk0 };

enum class Letter { A, AStar, B, W, WStar };

using Word = std::vector<Letter>;

class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Alphabet alphabet_of(Letter l);
Letter star(Letter l);
std::string to_string(Letter l);
std::string to_string(Alphabet a);

struct BasisWord {
    int first = 0;   // sphere: signed power of a / a*;  disk0: power of w
    int second = 0;  // sphere: power of b;              disk0: power of w*
    auto operator<=>(const BasisWord&) const = default;
};

Word to_word(const BasisWord& w, Alphabet alphabet);
int degree(const BasisWord& w, Alphabet alphabet);

class NCPoly {
public:
    using TermMap = std::map<BasisWord, LaurentQ>;

    explicit NCPoly(Alphabet alphabet = Alphabet::Sphere) : alphabet_(alphabet) {}

    static NCPoly one(Alphabet alphabet) { return scalar(alphabet, LaurentQ(1)); }
    static NCPoly scalar(Alphabet alphabet, const LaurentQ& c);
    static NCPoly generator(Letter l);
    static NCPoly basis(Alphabet alphabet, BasisWord w, const LaurentQ& c = LaurentQ(1));

    Alphabet alphabet() const { return alphabet_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentQ coefficient(BasisWord w) const;
    int degree() const;

    NCPoly& operator+=(const NCPoly& other);
    NCPoly& operator-=(const NCPoly& other);
    NCPoly& operator*=(const LaurentQ& c);
    NCPoly operator-() const;

    friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
    friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
    friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
    friend NCPoly operator*(const LaurentQ& c, NCPoly x) { return x *= c; }
    friend bool operator==(const NCPoly& x, const NCPoly& y) {
        return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
    }

    /// Readable form that parse_expression() accepts back.
    std::string to_string() const;

private:
    void add_term(BasisWord w, const LaurentQ& c);
    void require_same_alphabet(const NCPoly& other) const;

    Alphabet alphabet_;
    TermMap terms_;
};

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Parses a bare generator string such as "ba*ab" (no coefficients).
Word parse_word(std::string_view text, Alphabet alphabet);

/// Rewrites a word onto the basis with the defining relations as rules.
NCPoly normal_form(const Word& word, Alphabet alphabet,
                   RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);
NCPoly normal_form(std::string_view word, Alphabet alphabet,
                   RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

NCPoly multiply(const NCPoly& x, const NCPoly& y);
NCPoly adjoint(const NCPoly& x);

/// Mean over the circle of the symbol of x (a -> e^{i theta}, b -> 0;
/// w -> e^{i theta}) as an exact Laurent polynomial.
LaurentQ symbol_mean(const NCPoly& x);

class NCMat2 {
public:
    explicit NCMat2(Alphabet alphabet = Alphabet::Sphere);
    NCMat2(NCPoly e00, NCPoly e01, NCPoly e10, NCPoly e11);

    static NCMat2 identity(Alphabet alphabet);

    const NCPoly& operator()(int i, int j) const { return entries_[2 * i + j]; }
    NCPoly& operator()(int i, int j) { return entries_[2 * i + j]; }
    Alphabet alphabet() const { return entries_[0].alphabet(); }
    bool is_zero() const;

    friend NCMat2 operator+(const NCMat2& x, const NCMat2& y);
    friend NCMat2 operator-(const NCMat2& x, const NCMat2& y);
    friend NCMat2 operator*(const NCMat2& x, const NCMat2& y);
    friend bool operator==(const NCMat2& x, const NCMat2& y) { return x.entries_ == y.entries_; }

private:
    std::array<NCPoly, 4> entries_;
};

NCMat2 adjoint(const NCMat2& m);

/// The 2x2 projector 1/2 [[1 + b, a*], [a, 1 - q^-2 b]].
NCMat2 bott_projector();

/// Pass iff P^2 - P and P* - P vanish as exact Laurent polynomials.
Report check_projector(const NCMat2& p, const std::string& name = "projector");

}  // namespace qsphere
