#ifndef HOMCALC_POLY_HPP
#define HOMCALC_POLY_HPP

#include <cstdint>
#include <vector>

#include "homcalc/field.hpp"

namespace homcalc {

enum class Cmp { less, equal, greater };

/* Exponent vector with cached total degree. Exponents are capped at 2^15
 * per variable; products past the cap are a hard error. */
class Monomial {
public:
    explicit Monomial(int nvars) : exps_(nvars, 0), degree_(0) {}
    static Monomial from_exponents(std::vector<std::int32_t> exps);

    int nvars() const { return int(exps_.size()); }
    std::int32_t exponent(int i) const { return exps_[i]; }
    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;          // this | o
    Monomial divided_into(const Monomial& o) const; // o / this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    std::vector<std::int32_t> exps_;
    int degree_;
};

/* Graded reverse lexicographic order: higher total degree is greater; on a
 * tie, scan exponents from the last variable and the first difference
 * decides, smaller exponent winning. */
Cmp grevlex_cmp(const Monomial& a, const Monomial& b);
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return grevlex_cmp(a, b) == Cmp::less;
}

/* Terms sorted strictly descending in grevlex; no zero coefficients, no
 * duplicate monomials. The zero polynomial is the empty term list. */
class Polynomial {
public:
    struct Term {
        Monomial mon;
        std::uint32_t coeff;
    };

    Polynomial(PrimeField field, int nvars)
        : field_(field), nvars_(nvars) {}
    // Normalizes: merges duplicates, drops zeros, sorts descending.
    static Polynomial from_terms(PrimeField field, int nvars, std::vector<Term> terms);
    static Polynomial constant(PrimeField field, int nvars, std::uint32_t c);
    static Polynomial variable(PrimeField field, int nvars, int var, std::uint32_t c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    const PrimeField& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& lead() const { return terms_.front(); }

    // Total degree of the leading term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }
    bool is_homogeneous() const;
    // Nonzero scalar polynomial?
    bool is_unit_constant() const {
        return terms_.size() == 1 && terms_.front().mon.is_one();
    }

    Polynomial add(const Polynomial& o) const;
    Polynomial sub(const Polynomial& o) const;
    Polynomial mul(const Polynomial& o) const;
    Polynomial negate() const;
    Polynomial scale(std::uint32_t c) const;
    Polynomial mul_term(const Monomial& m, std::uint32_t c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    PrimeField field_;
    int nvars_;
    std::vector<Term> terms_;

    void check_compatible(const Polynomial& o) const;
};

enum class ArithOp { add, sub, mul };
Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op);

}  // namespace homcalc

#endif
