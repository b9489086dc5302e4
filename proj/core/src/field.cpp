#include "homcalc/field.hpp"

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31))
        throw Error("field modulus out of range [2, 2^31)");
    if (!is_prime_u32(p))
        throw Error("field modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p_, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return std::uint32_t(t);
}

}  // namespace homcalc
