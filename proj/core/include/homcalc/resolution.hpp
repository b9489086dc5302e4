#ifndef HOMCALC_RESOLUTION_HPP
#define HOMCALC_RESOLUTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "homcalc/complex.hpp"
#include "homcalc/presentation.hpp"

namespace homcalc {

/* Minimal graded free resolution window of a module: exact at 1..steps-1,
 * augmentation cokernel isomorphic to the resolved module, every
 * differential entry of positive degree. `aug_kept` and `aug_expr` relate
 * the basis of F_0 (a subset of the original generators) to the original
 * ambient basis. */
struct ResolutionWindow {
    FreeComplex complex;  // on [0, steps]
    bool minimal = true;
    std::vector<int> aug_kept;
    PolyMatrix aug_expr;

    int steps() const { return complex.hi; }
    std::vector<std::int64_t> ranks() const {
        return std::vector<std::int64_t>(complex.ranks.begin(), complex.ranks.end());
    }
};

ResolutionWindow minimal_resolution(const ModulePresentation& M, int steps);

/* Syzygy module Omega^d(M) presented as coker(d_{d+1}); needs steps >= d+1
 * available, computed on demand. */
ModulePresentation syzygy_module(const ModulePresentation& M, int d);

struct BettiTable {
    std::vector<std::int64_t> values;  // beta_0 .. beta_steps
};

BettiTable betti(const ModulePresentation& M, int steps);

struct ComplexityEstimate {
    int estimate = 0;
    int window = 0;
    bool stable = false;
};

/* Least t whose t-th finite-difference sequence has a trailing run of
 * zeros in the window; stable when the run covers the last half. */
ComplexityEstimate complexity_estimate(const BettiTable& B);

/* A subquotient span(cycles)/span(boundaries) of a free module over R,
 * with an exact zero test and an on-demand presentation. */
struct HomologyModule {
    CtxPtr ctx;
    FreeModule ambient;
    std::vector<ModuleElement> cycles;
    std::vector<ModuleElement> boundaries;

    bool is_zero() const;
    ModulePresentation presentation() const;  // generators = cycles
};

struct HilbertData {
    bool finite_length = false;
    std::int64_t length = 0;
    int degree_lo = 0;
    std::vector<std::int64_t> values;  // Hilbert function at degree_lo, degree_lo+1, ...
};

HilbertData length_or_hilbert(const ModulePresentation& M, int degree_bound);

struct TorEntry {
    int index;
    bool zero;
    bool finite;
    std::int64_t length;  // valid when finite
};

std::vector<TorEntry> tor(const ModulePresentation& M, const ModulePresentation& N, int hi);
std::vector<TorEntry> ext(const ModulePresentation& M, const ModulePresentation& N, int hi);

/* Tor_i / Ext^i as explicit subquotients (index range [0, hi]). */
std::vector<HomologyModule> tor_modules(const ModulePresentation& M, const ModulePresentation& N,
                                        int hi);
std::vector<HomologyModule> ext_modules(const ModulePresentation& M, const ModulePresentation& N,
                                        int hi);

/* Homology of (complex tensor N) at an index with both neighbors present. */
HomologyModule tensor_homology(const FreeComplex& T, int index, const ModulePresentation& N);
/* Cohomology of Hom(complex, N) at an index with both neighbors present. */
HomologyModule hom_cohomology(const FreeComplex& T, int index, const ModulePresentation& N);

/* Hom(M, N) as a presented module; generator_vectors are the generators as
 * elements of Hom(F_0, N)'s ambient column space. */
struct HomModule {
    ModulePresentation pres;
    std::vector<ModuleElement> generator_vectors;
    FreeModule hom_ambient;
};

HomModule hom_module(const ModulePresentation& M, const ModulePresentation& N);
HomModule dual_module(const ModulePresentation& M);  // Hom(M, R)

struct DepthReport {
    int depth = 0;
    int witness = 0;  // least i with Ext^i(k, M) nonzero
    int ring_depth = 0;
    int depth_difference = 0;  // depth A - depth M
};

DepthReport depth(const ModulePresentation& M, int ring_dim_bound = -1);

TorEntry entry_of(const HomologyModule& H, int index);

}  // namespace homcalc

#endif
