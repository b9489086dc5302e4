#ifndef HOMCALC_STABLE_HPP
#define HOMCALC_STABLE_HPP

#include "homcalc/resolution.hpp"

namespace homcalc {

struct GDimReport {
    int d = 0;  // syzygy index used, depth A - depth M
    bool reflexive = false;
    bool ext_vanishing = false;       // Ext^n(C, A) = 0 for 1 <= n <= bound
    bool dual_ext_vanishing = false;  // Ext^n(C*, A) = 0 for 1 <= n <= bound
    int bound = 0;
};

/* Certify G-dim Omega^d(M) = 0 with d from the depth report: reflexivity
 * of C = Omega^d(M) and Ext vanishing for C and C* up to the bound.
 * Throws ReflexivityFailure / ExtNonvanishing outside the regime. */
GDimReport gdim_zero_check(const ModulePresentation& M, int bound);

struct CompleteResolutionWindow {
    FreeComplex complex;  // on [-w, w + d]
    int splice_index = 0;  // image of the differential there is Omega^d(M)
    int d = 0;
};

/* Doubly infinite window by dualize-and-splice: the positive side is the
 * minimal resolution of M, the negative side the dual of the minimal
 * resolution of Omega^d(M)^*. Exactness is certified at every interior
 * index; ExactnessFailure reports the first bad index. */
CompleteResolutionWindow complete_resolution(const ModulePresentation& M, int w, int bound);

enum class PairingKind { tor, ext };

struct StableEntry {
    int index;
    bool zero;
    bool finite;
    std::int64_t length;
};

struct StableWindow {
    PairingKind kind;
    int lo = 0, hi = 0;
    std::vector<StableEntry> entries;

    const StableEntry& at(int index) const;
};

StableWindow stable_tor(const ModulePresentation& M, const ModulePresentation& N, int lo, int hi,
                        int bound);
StableWindow stable_ext(const ModulePresentation& M, const ModulePresentation& N, int lo, int hi,
                        int bound);

struct DualityReport {
    bool all_match = false;
    int lo = 0, hi = 0;
    std::vector<int> mismatched_indices;
};

/* Stable Tor_i(M, N) against stable Ext^{-i-1}(M*, N) for maximal
 * Cohen-Macaulay M; throws NotMCMError when depth A - depth M != 0. */
DualityReport duality_check(const ModulePresentation& M, const ModulePresentation& N, int lo,
                            int hi, int bound = 6);

}  // namespace homcalc

#endif
