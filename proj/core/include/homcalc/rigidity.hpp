#ifndef HOMCALC_RIGIDITY_HPP
#define HOMCALC_RIGIDITY_HPP

#include <string>

#include "homcalc/homotopy.hpp"
#include "homcalc/stable.hpp"

namespace homcalc {

enum class WindowKind { tor, ext, stable_tor, stable_ext };

struct VanishingEntry {
    int index;
    bool zero;
    bool finite;
    std::int64_t length;
};

struct VanishingWindow {
    WindowKind kind = WindowKind::tor;
    int lo = 0, hi = -1;
    std::vector<VanishingEntry> entries;  // contiguous, lo..hi
    std::string provenance;

    bool contains(int i) const { return i >= lo && i <= hi; }
    const VanishingEntry& at(int i) const;
};

VanishingWindow window_from_tor(const std::vector<TorEntry>& entries, WindowKind kind,
                                std::string provenance, int lo = 0);
VanishingWindow window_from_stable(const StableWindow& w, WindowKind kind,
                                   std::string provenance);

enum class Verdict { Confirmed, Vacuous, Violation, Inconclusive };
std::string verdict_name(Verdict v);

struct TheoremReport {
    std::string theorem;
    Verdict verdict = Verdict::Vacuous;
    std::vector<int> hypothesis_indices;
    std::vector<int> conclusion_indices;
    std::vector<int> skipped;            // conclusion indices outside the window
    std::vector<int> violation_indices;  // in-window failures under a true hypothesis
    std::string note;
};

/* Gap theorem: c equally spaced (step q, q odd) vanishing stable values at
 * n, n+q, ..., n+(c-1)q force vanishing at n-i(q+1) and n+(c-1)q+i(q+1)
 * for all i >= 1. With c = 0 every index must vanish. */
TheoremReport check_gap(const VanishingWindow& w, int n, int q, int c);

/* Consecutive-vanishing corollary over ordinary Tor/Ext: a run of c+1
 * zeros starting at some n >= d+1 forces vanishing at every index >= d+1. */
TheoremReport check_consecutive(const VanishingWindow& w, int c, int d);

/* d+1 consecutive stable zeros from an even start and from an odd start
 * force vanishing everywhere; the threshold n_0 is not effective, so a
 * nonzero residue with both runs present is reported Inconclusive. */
TheoremReport scan_torci(const VanishingWindow& w_even, const VanishingWindow& w_odd, int d);

/* Pre-rigidity descent: a vanishing Tor^R_n with n > r forces vanishing of
 * Tor^Q_{n-2i} for n >= n-2i > r (down to 0 when r = 0). */
TheoremReport check_premain(const VanishingWindow& w_R, const VanishingWindow& w_Q, int r);

/* length Tor^R_n(M,N) = sum_i length Tor^Q_{n-2i}(M,N), at pre-rigidity
 * degree 0; also verifies the finiteness claims. */
TheoremReport check_length_formula(const HypersurfaceTower& tower, const ModulePresentation& M,
                                   const ModulePresentation& N, int n);

/* The corollaries at pre-rigidity degree 0: even vanishing iff N = 0,
 * finite length at an even index iff the tensor product has finite length,
 * and the two-parity vanishing criterion with b = max{r, d+1} + c. */
std::vector<TheoremReport> check_corollaries(const HypersurfaceTower& tower,
                                             const ModulePresentation& M,
                                             const ModulePresentation& N, int window_hi);

struct ManifestEntry {
    WindowKind kind;
    int index;
    bool expect_zero;
};

struct PaperExampleSpec {
    int n = 1;
    std::uint32_t p = 2;
    CtxPtr R;
    std::vector<HypersurfaceTower> towers;  // one per quotient step
    ModulePresentation M;
    ModulePresentation N;
    std::string session_text;
    std::vector<ManifestEntry> manifest;
};

/* The worked family: R = k[x_1..x_n, y_1..y_n]/(x_1 y_1, ..., x_n y_n),
 * M = R/(x_1..x_n), N = R/(y_1..y_n), with the expected vanishing
 * manifest over stable Ext [-8, 8] and ordinary Tor [0, 10]. */
PaperExampleSpec paper_example(int n, std::uint32_t p);

}  // namespace homcalc

#endif
