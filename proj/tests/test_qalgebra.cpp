#include "doctest.h"

#include <random>

#include "qsphere/expression.hpp"
#include "qsphere/ncpoly.hpp"

using namespace qsphere;

namespace {

NCPoly sphere(const char* text) { return parse_expression(text, Alphabet::Sphere); }

Word random_word(std::mt19937& rng, Alphabet alphabet, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    const std::vector<Letter> letters = alphabet == Alphabet::Sphere
                                            ? std::vector<Letter>{Letter::A, Letter::AStar, Letter::B}
                                            : std::vector<Letter>{Letter::W, Letter::WStar};
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = letters[pick(rng)];
    return w;
}

NCPoly word_poly(const Word& w, Alphabet alphabet) {
    NCPoly p = NCPoly::one(alphabet);
    for (Letter l : w) p = p * NCPoly::generator(l);
    return p;
}

NCPoly random_poly(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-3, 3), expo(-4, 4);
    NCPoly p(Alphabet::Sphere);
    for (int i = nterms(rng); i > 0; --i)
        p += LaurentQ::monomial(expo(rng), coeff(rng)) * word_poly(random_word(rng, Alphabet::Sphere, max_len), Alphabet::Sphere);
    return p;
}

}  // namespace

TEST_CASE("Laurent coefficients evaluate exactly") {
    CHECK(eval_coeff(LaurentQ::monomial(2), 0.5) == 0.25);
    CHECK(eval_coeff(LaurentQ::monomial(-4), 0.5) == 16.0);
    CHECK(eval_coeff(LaurentQ(1) - LaurentQ::monomial(4), 0.5) == 0.9375);
    CHECK_THROWS_AS(eval_coeff(LaurentQ(1), 1.0), std::domain_error);
    CHECK_THROWS_AS(eval_coeff(LaurentQ(1), 0.0), std::domain_error);

    const LaurentQ c = LaurentQ::from_terms({{-2, Rational(1, 2)}, {0, 1}});
    CHECK((c * c).coefficient(-2) == 1);
    CHECK((c - c).is_zero());
    CHECK(c.to_string() == "1/2*q^-2 + 1");
}

TEST_CASE("defining relations as rewrite rules") {
    const auto q2 = LaurentQ::monomial(2);
    CHECK(normal_form("ba", Alphabet::Sphere) == q2 * sphere("a b"));
    CHECK(normal_form("a*a", Alphabet::Sphere) == sphere("1 - b^2"));
    CHECK(normal_form("aa*", Alphabet::Sphere) == sphere("1 - q^-4 b^2"));
    CHECK(normal_form("ba*", Alphabet::Sphere) == sphere("q^-2 a* b"));
    CHECK(normal_form("w*w", Alphabet::Disk0) == NCPoly::one(Alphabet::Disk0));
    CHECK(normal_form("ww*", Alphabet::Disk0).terms().size() == 1);
    CHECK_THROWS_AS(normal_form("ax", Alphabet::Sphere), AlphabetError);
    CHECK_THROWS_AS(normal_form("w", Alphabet::Sphere), AlphabetError);
}

TEST_CASE("all three relations reduce to zero") {
    CHECK(sphere("b a - q^2 a b").is_zero());
    CHECK(sphere("a*a + b^2 - 1").is_zero());
    CHECK(sphere("q^4 a a* + b^2 - q^4").is_zero());
}

TEST_CASE("multiplication examples") {
    const NCPoly one = NCPoly::one(Alphabet::Sphere);
    const NCPoly b = NCPoly::generator(Letter::B);
    CHECK(one * b == b);
    CHECK(b * b == NCPoly::basis(Alphabet::Sphere, {0, 2}));
    CHECK(NCPoly::generator(Letter::A) * NCPoly::generator(Letter::AStar) == sphere("1 - q^-4 b^2"));
    CHECK_THROWS_AS(b * NCPoly::generator(Letter::W), AlphabetError);
}

TEST_CASE("adjoint examples") {
    CHECK(adjoint(NCPoly::generator(Letter::A)) == NCPoly::generator(Letter::AStar));
    CHECK(adjoint(NCPoly::generator(Letter::B)) == NCPoly::generator(Letter::B));
    // (q^2 ab)* = q^2 b a* = a* b
    CHECK(adjoint(sphere("q^2 a b")) == sphere("a* b"));
    CHECK(adjoint(sphere("a^2 b^3")) == sphere("b^3 a*^2"));
    CHECK(adjoint(parse_expression("w^2 w*", Alphabet::Disk0)) == parse_expression("w w*^2", Alphabet::Disk0));
}

TEST_CASE("rewriting is confluent on random words") {
    std::mt19937 rng(20240611);
    for (Alphabet alphabet : {Alphabet::Sphere, Alphabet::Disk0}) {
        for (int i = 0; i < 200; ++i) {
            const Word w = random_word(rng, alphabet, 8);
            const NCPoly left = normal_form(w, alphabet, RewriteStrategy::LeftmostFirst);
            const NCPoly right = normal_form(w, alphabet, RewriteStrategy::RightmostFirst);
            REQUIRE(left == right);
            // the structured product agrees with term rewriting
            REQUIRE(word_poly(w, alphabet) == left);
        }
    }
}

TEST_CASE("normal forms only use basis words") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const NCPoly p = normal_form(random_word(rng, Alphabet::Sphere, 8), Alphabet::Sphere);
        for (const auto& [w, c] : p.terms()) {
            CHECK(w.second >= 0);
            CHECK(!c.is_zero());
        }
    }
    for (int i = 0; i < 100; ++i) {
        const NCPoly p = normal_form(random_word(rng, Alphabet::Disk0, 8), Alphabet::Disk0);
        for (const auto& [w, c] : p.terms()) {
            CHECK(w.first >= 0);
            CHECK(w.second >= 0);
            CHECK(c == LaurentQ(1));
        }
    }
}

TEST_CASE("algebra axioms on random elements") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        const NCPoly x = random_poly(rng, 3), y = random_poly(rng, 3), z = random_poly(rng, 3);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(adjoint(adjoint(x)) == x);
        CHECK(adjoint(x * y) == adjoint(y) * adjoint(x));
    }
}

TEST_CASE("expression syntax round trips") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        const NCPoly x = random_poly(rng, 4);
        CHECK(parse_expression(x.to_string(), Alphabet::Sphere) == x);
    }
    CHECK(sphere("a*a") == sphere("a* a"));
    CHECK(sphere("a * a") == sphere("a a"));
    CHECK(sphere("(1/2)(1 + b)") == LaurentQ(Rational(1, 2)) * sphere("1 + b"));
    CHECK(sphere("q^-2") == NCPoly::scalar(Alphabet::Sphere, LaurentQ::monomial(-2)));
    CHECK(detect_alphabet("w*w") == Alphabet::Disk0);
    CHECK(detect_alphabet("a b") == Alphabet::Sphere);
    CHECK_THROWS_AS(sphere("a +"), ParseError);
    CHECK_THROWS_AS(sphere("(a"), ParseError);
    CHECK_THROWS_AS(parse_expression("q w", Alphabet::Disk0), AlphabetError);
}

TEST_CASE("symbol means") {
    CHECK(symbol_mean(sphere("3 + a + b")) == LaurentQ(3));
    CHECK(symbol_mean(sphere("a a*")) == LaurentQ(1));
    CHECK(symbol_mean(sphere("a* a b")).is_zero());
    CHECK(symbol_mean(parse_expression("w w* + 2 w", Alphabet::Disk0)) == LaurentQ(1));
}

TEST_CASE("projector checks") {
    CHECK(check_projector(NCMat2::identity(Alphabet::Sphere), "identity").status == Status::Pass);
    const NCMat2 p = bott_projector();
    CHECK(check_projector(p, "p'").status == Status::Pass);
    CHECK(p * p == p);
    CHECK(adjoint(p) == p);
    NCMat2 bad(Alphabet::Sphere);
    bad(0, 0) = NCPoly::generator(Letter::A);
    CHECK(check_projector(bad, "diag(a,0)").status == Status::Fail);
}
