#ifndef HOMCALC_TEXT_HPP
#define HOMCALC_TEXT_HPP

#include <memory>
#include <string>
#include <vector>

#include "homcalc/matrix.hpp"
#include "homcalc/poly.hpp"

namespace homcalc {

/* The base polynomial ring S: a prime field and an ordered variable list. */
struct Ring {
    PrimeField field;
    std::vector<std::string> vars;

    int nvars() const { return int(vars.size()); }
    int var_index(const std::string& name) const;  // -1 when absent
};

/* Text syntax: terms joined by `+`/`-`; a term is `[coeff*]var[^exp]`
 * factors joined by `*`, e.g. `3*x^2*y - y^3`. Coefficients are
 * non-negative integers reduced mod p. */
Polynomial parse_polynomial(const std::string& text, const Ring& ring);
std::string polynomial_to_string(const Polynomial& p, const Ring& ring);
std::string monomial_to_string(const Monomial& m, const Ring& ring);

std::string matrix_to_string(const PolyMatrix& m, const Ring& ring);

}  // namespace homcalc

#endif
