#ifndef HOMCALC_HOMOTOPY_HPP
#define HOMCALC_HOMOTOPY_HPP

#include <optional>

#include "homcalc/resolution.hpp"

namespace homcalc {

/* A system of higher homotopies on a Q-free resolution F of an R-module M,
 * R = Q/(x): sigma_0 is the differential of F, and for i >= 1 sigma_i is a
 * degree 2i-1 endomorphism with
 *     sigma_0 sigma_1 + sigma_1 sigma_0 = x Id,
 *     sum_{i+j=n} sigma_i sigma_j = 0  for n > 1.
 * (sigma_i)_j maps F_j to F_{j+2i-1}; blocks are stored for 0 <= j <= J
 * plus the extra range each recursion step needs. */
struct HomotopySystem {
    HypersurfaceTower tower;
    ModulePresentation M;            // over R, as given
    ModulePresentation M_over_Q;     // same module presented over Q
    ResolutionWindow F;              // minimal Q-free resolution of M_over_Q
    int J = 0;
    int imax = 0;
    // sigma[i-1][j] = (sigma_i)_j for 1 <= i <= imax, 0 <= j <= stored_hi(i)
    std::vector<std::vector<PolyMatrix>> sigma;

    int stored_hi(int i) const { return J + 2 * (imax - i); }
    const PolyMatrix& sigma_at(int i, int j) const { return sigma[i - 1][j]; }
};

/* Build the canonical homotopy system by division lifts, then verify the
 * defining identities exactly on all stored indices. */
HomotopySystem higher_homotopies(const HypersurfaceTower& tower, const ModulePresentation& M,
                                 int J, int imax);

/* D tensor F with the differential e_i ox f -> sum_j e_{i-j} ox sigma_j(f),
 * an R-free resolution of M. Basis labels record the (i, j) block. */
struct ShamashComplex {
    FreeComplex window;  // over R on [0, W]
    struct BlockLabel {
        int i;  // D_{2i} factor
        int j;  // F_j factor
        int rank;
    };
    std::vector<std::vector<BlockLabel>> blocks;  // per degree
};

ShamashComplex shamash_resolution(const HomotopySystem& H, int W);

/* True when F is minimal and every stored sigma_i, i >= 1, has entries with
 * zero constant term; then the Shamash resolution is minimal. */
bool minimality_check(const HomotopySystem& H);

struct PrerigidityWitness {
    int candidate_r;
    int i, j;
    int row, col;
    int n_generator;
};

struct PrerigidityReport {
    std::optional<int> degree;  // empty = NotWithinBound
    int bound = 0;
    std::vector<PrerigidityWitness> witnesses;  // first failure per failed candidate
    // A report is a statement about the canonical system computed here; a
    // missing witness bound does not refute pre-rigidity itself.
};

/* Minimal r <= bound with (sigma_i)_j ox N = 0 for all stored i >= 1 and
 * j > r - (2i-1), decided entrywise against N's relation basis. */
PrerigidityReport prerigidity_degree(const HomotopySystem& H, const ModulePresentation& N,
                                     int bound);

struct PoincareReport {
    bool holds = false;
    std::vector<std::int64_t> r_betti;
    std::vector<std::int64_t> predicted;
};

/* Coefficientwise check of P^R_M(t) = P^Q_M(t) / (1 - t^2) through the
 * bound; requires minimality_check. */
PoincareReport check_poincare(const HomotopySystem& H, const ModulePresentation& M, int t_bound);

}  // namespace homcalc

#endif
