#include "homcalc/poly.hpp"

#include <algorithm>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {
constexpr std::int32_t kMaxExponent = 1 << 15;
}

Monomial Monomial::from_exponents(std::vector<std::int32_t> exps) {
    Monomial m(int(exps.size()));
    int deg = 0;
    for (std::int32_t e : exps) {
        if (e < 0) throw Error("negative exponent");
        if (e > kMaxExponent) throw ExponentOverflowError("exponent exceeds 2^15");
        deg += e;
    }
    m.exps_ = std::move(exps);
    m.degree_ = deg;
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    if (nvars() != o.nvars()) throw DimensionError("monomial variable-count mismatch");
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i) {
        r.exps_[i] = exps_[i] + o.exps_[i];
        if (r.exps_[i] > kMaxExponent)
            throw ExponentOverflowError("exponent exceeds 2^15 in product");
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) throw DimensionError("monomial variable-count mismatch");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i) {
        r.exps_[i] = o.exps_[i] - exps_[i];
        if (r.exps_[i] < 0) throw Error("non-divisible monomial quotient");
    }
    r.degree_ = o.degree_ - degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("monomial variable-count mismatch");
    Monomial r(a.nvars());
    int deg = 0;
    for (int i = 0; i < a.nvars(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        deg += r.exps_[i];
    }
    r.degree_ = deg;
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
}

Cmp grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("grevlex on different variable counts");
    if (a.degree() != b.degree())
        return a.degree() > b.degree() ? Cmp::greater : Cmp::less;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? Cmp::greater : Cmp::less;
    }
    return Cmp::equal;
}

Polynomial Polynomial::from_terms(PrimeField field, int nvars, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.mon.nvars() != nvars) throw DimensionError("term variable-count mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return grevlex_cmp(a.mon, b.mon) == Cmp::greater;
    });
    Polynomial p(field, nvars);
    for (auto& t : terms) {
        std::uint32_t c = t.coeff % field.modulus();
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coeff = field.add(p.terms_.back().coeff, c);
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (c != 0) {
            p.terms_.push_back({t.mon, c});
        }
    }
    return p;
}

Polynomial Polynomial::constant(PrimeField field, int nvars, std::uint32_t c) {
    Polynomial p(field, nvars);
    c %= field.modulus();
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::variable(PrimeField field, int nvars, int var, std::uint32_t c) {
    std::vector<std::int32_t> e(nvars, 0);
    e[var] = 1;
    return from_terms(field, nvars, {{Monomial::from_exponents(std::move(e)), c}});
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mon.degree();
    for (const Term& t : terms_)
        if (t.mon.degree() != d) return false;
    return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || field_ != o.field_)
        throw RingMismatchError("polynomials over different rings");
}

Polynomial Polynomial::add(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Cmp c = grevlex_cmp(terms_[i].mon, o.terms_[j].mon);
        if (c == Cmp::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == Cmp::less) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mon, s});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::negate() const {
    Polynomial r(field_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const { return add(o.negate()); }

Polynomial Polynomial::scale(std::uint32_t c) const {
    c %= field_.modulus();
    if (c == 0) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, std::uint32_t c) const {
    c %= field_.modulus();
    if (c == 0) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({t.mon.times(m), field_.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
    check_compatible(o);
    Polynomial acc(field_, nvars_);
    for (const Term& t : o.terms_)
        acc = acc.add(mul_term(t.mon, t.coeff));
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || field_ != o.field_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mon != o.terms_[i].mon)
            return false;
    return true;
}

Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
    switch (op) {
        case ArithOp::add: return f.add(g);
        case ArithOp::sub: return f.sub(g);
        case ArithOp::mul: return f.mul(g);
    }
    throw Error("unreachable");
}

}  // namespace homcalc
