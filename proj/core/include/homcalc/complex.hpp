#ifndef HOMCALC_COMPLEX_HPP
#define HOMCALC_COMPLEX_HPP

#include <vector>

#include "homcalc/presentation.hpp"

namespace homcalc {

/* Indexed family of free modules F_i for lo <= i <= hi with differentials
 * d_i : F_i -> F_{i-1} for lo < i <= hi. The composite of consecutive maps
 * is zero modulo the defining ideal. */
struct FreeComplex {
    int lo = 0;
    int hi = -1;
    std::vector<int> ranks;                // index i stored at i - lo
    std::vector<std::vector<int>> shifts;  // per index, one shift per basis vector
    std::vector<PolyMatrix> maps;          // maps[i - lo] = d_i; maps[0] is unused

    int rank_at(int i) const { return ranks[std::size_t(i - lo)]; }
    const std::vector<int>& shifts_at(int i) const { return shifts[std::size_t(i - lo)]; }
    const PolyMatrix& map_at(int i) const { return maps[std::size_t(i - lo)]; }
    bool has_map(int i) const { return i > lo && i <= hi; }
    FreeModule module_at(int i) const { return FreeModule{rank_at(i), shifts_at(i)}; }
};

/* d_{i} . d_{i+1} == 0 mod the defining ideal, for all applicable i. */
bool complex_squares_to_zero(const FreeComplex& c, const QuotientRingCtx& ctx);

/* Every entry of every differential has zero constant term. */
bool complex_is_minimal(const FreeComplex& c);

/* ker(d_i) contained in im(d_{i+1}); needs lo < i < hi. */
bool homology_zero_at(const FreeComplex& c, int i, const QuotientRingCtx& ctx);

/* Split all unit-constant pivots out of the window, Gaussian-elimination
 * style; homology at every index is unchanged. */
void minimalize_window(FreeComplex& c, const QuotientRingCtx& ctx);

}  // namespace homcalc

#endif
