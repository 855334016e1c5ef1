#include "lpm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpm {

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(Rational c) {
    return Polynomial({std::move(c)});
}

Polynomial Polynomial::variable() {
    return Polynomial({Rational(0), Rational(1)});
}

Polynomial Polynomial::from_strings(const std::vector<std::string>& ascending) {
    std::vector<Rational> cs;
    cs.reserve(ascending.size());
    for (const auto& s : ascending) {
        cs.push_back(Rational::parse(s));
    }
    return Polynomial(std::move(cs));
}

Rational Polynomial::coefficient(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Horner in the shifted variable: acc(t) <- acc(t) * (t + c) + a_k.
    Polynomial acc;
    const Polynomial t_plus_c({c, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t_plus_c + Polynomial::constant(*it);
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, Polynomial p) {
    for (auto& a : p.coeffs_) {
        a *= c;
    }
    p.trim();
    return p;
}

std::string Polynomial::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[d];
        if (c.is_zero()) {
            continue;
        }
        const Rational abs = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mag;
        if (abs == Rational(1) && d > 0) {
            mag = "";
        } else if (abs.is_integer()) {
            mag = abs.str();
        } else {
            mag = "(" + abs.str() + ")";
        }
        if (d == 0) {
            out += abs.str();
        } else if (d == 1) {
            out += mag + "t";
        } else {
            out += mag + "t^" + std::to_string(d);
        }
    }
    return out;
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.str());
    }
    return out;
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("interpolation with duplicate abscissa");
            }
        }
    }
    // Newton form: divided differences, then expand.
    const std::size_t n = points.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    }
    Polynomial result;
    Polynomial basis = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        result += dd[i] * basis;
        basis = basis * Polynomial({-points[i].first, Rational(1)});
    }
    return result;
}

bool coeffwise_leq(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    for (std::size_t d = 0; d < n; ++d) {
        if (a.coefficient(d) > b.coefficient(d)) {
            return false;
        }
    }
    return true;
}

}  // namespace lpm
