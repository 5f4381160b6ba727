#pragma once

// Laurent polynomials in the deformation parameter q with exact rational
// coefficients.

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace qsphere {

using Rational = mpq_class;

class LaurentQ {
public:
    using TermMap = std::map<int, Rational>;

    LaurentQ() = default;
    LaurentQ(long value);  // NOLINT(google-explicit-constructor)
    explicit LaurentQ(const Rational& value);

    /// coefficient * q^exponent
    static LaurentQ monomial(int exponent, const Rational& coefficient = 1);
    static LaurentQ from_terms(std::initializer_list<std::pair<int, Rational>> terms);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    /// Exact value at a real q in (0,1); throws std::domain_error otherwise.
    double evaluate(double q) const;

    LaurentQ& operator+=(const LaurentQ& other);
    LaurentQ& operator-=(const LaurentQ& other);
    LaurentQ& operator*=(const LaurentQ& other);
    LaurentQ operator-() const;

    friend LaurentQ operator+(LaurentQ lhs, const LaurentQ& rhs) { return lhs += rhs; }
    friend LaurentQ operator-(LaurentQ lhs, const LaurentQ& rhs) { return lhs -= rhs; }
    friend LaurentQ operator*(const LaurentQ& lhs, const LaurentQ& rhs);
    friend bool operator==(const LaurentQ& lhs, const LaurentQ& rhs) { return lhs.terms_ == rhs.terms_; }

    /// Multiply by q^shift.
    LaurentQ shifted(int shift) const;

    std::string to_string() const;

private:
    void add_term(int exponent, const Rational& coefficient);

    TermMap terms_;
};

double eval_coeff(const LaurentQ& c, double q);

}  // namespace qsphere
