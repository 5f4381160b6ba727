#include "qsphere/expression.hpp"

#include <cctype>
#include <string>

namespace qsphere {

namespace {

class Parser {
public:
    Parser(std::string_view text, Alphabet alphabet) : text_(text), alphabet_(alphabet) {}

    NCPoly parse() {
        NCPoly r = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return c == '(' || c == 'a' || c == 'b' || c == 'w' || c == 'q' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    NCPoly expr() {
        NCPoly r(alphabet_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        NCPoly t = term();
        r = negate ? -t : t;
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            if (c == '+') r += term();
            else r -= term();
        }
        return r;
    }

    NCPoly term() {
        NCPoly r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * factor();
            } else if (starts_factor(c)) {
                r = r * factor();
            } else {
                return r;
            }
        }
    }

    long integer(bool allow_sign) {
        skip_space();
        bool neg = false;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            neg = text_[pos_++] == '-';
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(std::string(text_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    NCPoly factor() {
        const char c = peek();
        if (c == 'q') {
            ++pos_;
            int exponent = 1;
            if (peek() == '^') {
                ++pos_;
                exponent = static_cast<int>(integer(true));
            }
            if (alphabet_ == Alphabet::Disk0) throw AlphabetError("q does not appear in disk0 coefficients");
            return NCPoly::scalar(alphabet_, LaurentQ::monomial(exponent));
        }
        NCPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            const long n = integer(false);
            NCPoly r = NCPoly::one(alphabet_);
            for (long i = 0; i < n; ++i) r = r * base;
            return r;
        }
        return base;
    }

    NCPoly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NCPoly r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v(integer(false));
            if (peek() == '/') {
                ++pos_;
                const long den = integer(false);
                if (den == 0) fail("zero denominator");
                v /= den;
            }
            return NCPoly::scalar(alphabet_, LaurentQ(v));
        }
        if (c == 'a' || c == 'b' || c == 'w') {
            ++pos_;
            const bool starred = pos_ < text_.size() && text_[pos_] == '*';
            if (starred && c != 'b') ++pos_;
            Letter l = c == 'b' ? Letter::B
                     : c == 'a' ? (starred ? Letter::AStar : Letter::A)
                                : (starred ? Letter::WStar : Letter::W);
            if (alphabet_of(l) != alphabet_)
                throw AlphabetError("generator " + to_string(l) + " not in alphabet " + to_string(alphabet_));
            return NCPoly::generator(l);
        }
        if (c == '\0') fail("unexpected end of input");
        throw AlphabetError(std::string("unknown symbol '") + c + "'");
    }

    std::string_view text_;
    Alphabet alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_expression(std::string_view text, Alphabet alphabet) { return Parser(text, alphabet).parse(); }

Alphabet detect_alphabet(std::string_view text) {
    const bool sphere = text.find('a') != std::string_view::npos || text.find('b') != std::string_view::npos;
    const bool disk = text.find('w') != std::string_view::npos;
    if (sphere && disk) throw AlphabetError("expression mixes sphere and disk0 generators");
    return disk ? Alphabet::Disk0 : Alphabet::Sphere;
}

}  // namespace qsphere
