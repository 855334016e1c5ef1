#include "lpm/rational.hpp"

#include <stdexcept>

namespace lpm {

Rational::Rational(Integer num, Integer den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        Integer n;
        if (n.set_str(text, 10) != 0) {
            throw std::invalid_argument("malformed rational: " + text);
        }
        return Rational(n);
    }
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string s = numerator().get_str();
    if (!is_integer()) {
        s += "/" + denominator().get_str();
    }
    return s;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::invalid_argument("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

}  // namespace lpm
