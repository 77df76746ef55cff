#include "homind/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace homind {

QPoly poly_add(const QPoly& p, const QPoly& q) {
    std::vector<Rational> out(std::max(p.c.size(), q.c.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
    return QPoly(std::move(out));
}

QPoly poly_sub(const QPoly& p, const QPoly& q) {
    std::vector<Rational> out(std::max(p.c.size(), q.c.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) - q.coeff(i);
    return QPoly(std::move(out));
}

QPoly poly_mul(const QPoly& p, const QPoly& q) {
    if (p.is_zero() || q.is_zero()) return QPoly();
    std::vector<Rational> out(p.c.size() + q.c.size() - 1, Rational(0));
    for (size_t i = 0; i < p.c.size(); ++i)
        for (size_t j = 0; j < q.c.size(); ++j) out[i + j] += p.c[i] * q.c[j];
    return QPoly(std::move(out));
}

Rational poly_eval(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
    return acc;
}

std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.c.size(); i-- > 0;) {
        const Rational& ci = p.c[i];
        if (ci == 0) continue;
        Rational mag = ci < 0 ? Rational(-ci) : ci;
        if (first) {
            if (ci < 0) os << "-";
            first = false;
        } else {
            os << (ci < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit) os << rat_str(mag);
        if (i > 0) {
            if (!unit) os << " ";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace homind
