#pragma once

#include <string>
#include <vector>

#include "homind/rational.hpp"

namespace homind {

// Dense univariate polynomial over Q, coefficient of x^i at c[i].
// Invariant: no trailing zero coefficient; the zero polynomial is c = {}.
struct QPoly {
    std::vector<Rational> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    // degree of zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    Rational coeff(size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const QPoly& o) const { return c == o.c; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
};

QPoly poly_add(const QPoly& p, const QPoly& q);
QPoly poly_sub(const QPoly& p, const QPoly& q);
QPoly poly_mul(const QPoly& p, const QPoly& q);
Rational poly_eval(const QPoly& p, const Rational& x);

// e.g. "x^2 - 1/2 x + 3"; zero prints "0"
std::string poly_str(const QPoly& p);

}  // namespace homind
