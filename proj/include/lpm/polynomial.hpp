#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpm/rational.hpp"

namespace lpm {

// Univariate polynomial with exact rational coefficients, stored ascending
// by degree with no trailing zeros. The zero polynomial has an empty
// coefficient list and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coeffs);

    static Polynomial constant(Rational c);
    static Polynomial variable();  // t
    // Coefficients as "num/den" strings, ascending degree.
    static Polynomial from_strings(const std::vector<std::string>& ascending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t d) const;
    Rational leading_coefficient() const;

    Rational operator()(const Rational& x) const;

    // q with q(t) = p(t + c).
    Polynomial shifted(const Rational& c) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // Human form, descending powers: "(47/180)t^6 + ... + (251/60)t + 1".
    std::string str() const;
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Unique interpolant through the given points; abscissae must be distinct.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// True iff every coefficient of a is <= the matching coefficient of b,
// padding the shorter list with zeros.
bool coeffwise_leq(const Polynomial& a, const Polynomial& b);

}  // namespace lpm
