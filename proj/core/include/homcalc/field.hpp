#ifndef HOMCALC_FIELD_HPP
#define HOMCALC_FIELD_HPP

#include <cstdint>

namespace homcalc {

/* Prime field F_p with 2 <= p < 2^31. Elements are residues in [0, p),
 * stored as uint32_t; all intermediate products fit in 64 bits. */
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? std::uint32_t(s - p_) : std::uint32_t(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(a + p_ - b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return std::uint32_t(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace homcalc

#endif
