#include "homcalc/text.hpp"

#include <cctype>
#include <sstream>

#include "homcalc/errors.hpp"

namespace homcalc {

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return int(i);
    return -1;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("polynomial syntax error at position " + std::to_string(pos) + ": " + msg);
    }
};

std::uint64_t parse_number(Cursor& c) {
    c.skip_ws();
    std::uint64_t v = 0;
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        v = v * 10 + std::uint64_t(c.s[c.pos] - '0');
        if (v > (1ull << 60)) c.fail("numeric literal too large");
        ++c.pos;
    }
    if (c.pos == start) c.fail("expected a number");
    return v;
}

std::string parse_ident(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_')) {
        ++c.pos;
    }
    if (c.pos == start) c.fail("expected an identifier");
    return c.s.substr(start, c.pos - start);
}

// [coeff*]var[^exp] factors joined by '*'
Polynomial::Term parse_term(Cursor& c, const Ring& ring) {
    const PrimeField& F = ring.field;
    std::uint32_t coeff = 1;
    std::vector<std::int32_t> exps(ring.nvars(), 0);
    bool saw_factor = false;
    for (;;) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::uint64_t n = parse_number(c);
            coeff = F.mul(coeff, std::uint32_t(n % F.modulus()));
            saw_factor = true;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t at = c.pos;
            std::string name = parse_ident(c);
            int vi = ring.var_index(name);
            if (vi < 0) {
                c.pos = at;
                c.fail("unknown variable '" + name + "'");
            }
            std::int64_t e = 1;
            if (c.peek() == '^') {
                ++c.pos;
                e = std::int64_t(parse_number(c));
            }
            if (exps[vi] + e > (1 << 15)) c.fail("exponent exceeds 2^15");
            exps[vi] += std::int32_t(e);
            saw_factor = true;
        } else {
            c.fail("expected a coefficient or variable");
        }
        if (c.peek() == '*') {
            ++c.pos;
            continue;
        }
        break;
    }
    if (!saw_factor) c.fail("empty term");
    return {Monomial::from_exponents(std::move(exps)), coeff};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    Cursor c{text};
    std::vector<Polynomial::Term> terms;
    if (c.done()) throw Error("empty polynomial text");
    bool negate = false;
    if (c.peek() == '-') {
        negate = true;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    for (;;) {
        Polynomial::Term t = parse_term(c, ring);
        if (negate) t.coeff = ring.field.neg(t.coeff);
        terms.push_back(std::move(t));
        if (c.done()) break;
        char ch = c.peek();
        if (ch == '+') {
            negate = false;
            ++c.pos;
        } else if (ch == '-') {
            negate = true;
            ++c.pos;
        } else {
            c.fail("expected '+' or '-'");
        }
    }
    return Polynomial::from_terms(ring.field, ring.nvars(), std::move(terms));
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!first) out << "*";
        out << ring.vars[i];
        if (m.exponent(i) > 1) out << "^" << m.exponent(i);
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

std::string polynomial_to_string(const Polynomial& p, const Ring& ring) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) out << "+";
        if (t.mon.is_one()) {
            out << t.coeff;
        } else {
            if (t.coeff != 1) out << t.coeff << "*";
            out << monomial_to_string(t.mon, ring);
        }
        first = false;
    }
    return out.str();
}

std::string matrix_to_string(const PolyMatrix& m, const Ring& ring) {
    std::ostringstream out;
    out << "[ ";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out << " ; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << polynomial_to_string(m.at(i, j), ring);
        }
    }
    out << " ]";
    return out.str();
}

}  // namespace homcalc
