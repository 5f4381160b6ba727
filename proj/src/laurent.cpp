#include "qsphere/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsphere {

LaurentQ::LaurentQ(long value) : LaurentQ(Rational(value)) {}

LaurentQ::LaurentQ(const Rational& value) {
    if (value != 0) terms_.emplace(0, value);
}

LaurentQ LaurentQ::monomial(int exponent, const Rational& coefficient) {
    LaurentQ r;
    r.add_term(exponent, coefficient);
    return r;
}

LaurentQ LaurentQ::from_terms(std::initializer_list<std::pair<int, Rational>> terms) {
    LaurentQ r;
    for (const auto& [e, c] : terms) r.add_term(e, c);
    return r;
}

void LaurentQ::add_term(int exponent, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentQ::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentQ::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentQ::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

double LaurentQ::evaluate(double q) const {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0,1)");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(q, e);
    return sum;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentQ operator*(const LaurentQ& lhs, const LaurentQ& rhs) {
    LaurentQ r;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& other) { return *this = *this * other; }

LaurentQ LaurentQ::operator-() const {
    LaurentQ r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentQ LaurentQ::shifted(int shift) const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
}

std::string LaurentQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = (mag == 1);
        if (!unit || e == 0) os << mag.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

double eval_coeff(const LaurentQ& c, double q) { return c.evaluate(q); }

}  // namespace qsphere
