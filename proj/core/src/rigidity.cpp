#include "homcalc/rigidity.hpp"

#include <algorithm>
#include <sstream>

#include "homcalc/errors.hpp"

namespace homcalc {

const VanishingEntry& VanishingWindow::at(int i) const {
    if (!contains(i)) throw DimensionError("vanishing window index out of range");
    return entries[std::size_t(i - lo)];
}

VanishingWindow window_from_tor(const std::vector<TorEntry>& entries, WindowKind kind,
                                std::string provenance, int lo) {
    VanishingWindow w;
    w.kind = kind;
    w.lo = lo;
    w.hi = lo + int(entries.size()) - 1;
    w.provenance = std::move(provenance);
    for (const auto& e : entries) w.entries.push_back({e.index, e.zero, e.finite, e.length});
    return w;
}

VanishingWindow window_from_stable(const StableWindow& sw, WindowKind kind,
                                   std::string provenance) {
    VanishingWindow w;
    w.kind = kind;
    w.lo = sw.lo;
    w.hi = sw.hi;
    w.provenance = std::move(provenance);
    for (const auto& e : sw.entries) w.entries.push_back({e.index, e.zero, e.finite, e.length});
    return w;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Vacuous: return "Vacuous";
        case Verdict::Violation: return "Violation";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

TheoremReport check_gap(const VanishingWindow& w, int n, int q, int c) {
    if (q < 1 || q % 2 == 0) throw DimensionError("gap theorem requires odd q >= 1");
    if (c < 0) throw DimensionError("negative complexity");
    TheoremReport rep;
    rep.theorem = "gap";

    if (c == 0) {
        // zero complexity: every stable value is zero unconditionally
        for (const auto& e : w.entries) {
            rep.conclusion_indices.push_back(e.index);
            if (!e.zero) rep.violation_indices.push_back(e.index);
        }
        rep.verdict = rep.violation_indices.empty() ? Verdict::Confirmed : Verdict::Violation;
        return rep;
    }

    for (int t = 0; t < c; ++t) rep.hypothesis_indices.push_back(n + t * q);
    for (int idx : rep.hypothesis_indices) {
        if (!w.contains(idx) || !w.at(idx).zero) {
            rep.verdict = Verdict::Vacuous;
            rep.note = "hypothesis not established at index " + std::to_string(idx);
            return rep;
        }
    }
    bool any_skip_low = false, any_skip_high = false;
    for (int i = 1;; ++i) {
        int lo_idx = n - i * (q + 1);
        int hi_idx = n + (c - 1) * q + i * (q + 1);
        bool lo_in = w.contains(lo_idx), hi_in = w.contains(hi_idx);
        if (lo_in) {
            rep.conclusion_indices.push_back(lo_idx);
            if (!w.at(lo_idx).zero) rep.violation_indices.push_back(lo_idx);
        } else if (!any_skip_low) {
            rep.skipped.push_back(lo_idx);
            any_skip_low = true;
        }
        if (hi_in) {
            rep.conclusion_indices.push_back(hi_idx);
            if (!w.at(hi_idx).zero) rep.violation_indices.push_back(hi_idx);
        } else if (!any_skip_high) {
            rep.skipped.push_back(hi_idx);
            any_skip_high = true;
        }
        if (!lo_in && !hi_in) break;
    }
    rep.verdict = rep.violation_indices.empty() ? Verdict::Confirmed : Verdict::Violation;
    return rep;
}

TheoremReport check_consecutive(const VanishingWindow& w, int c, int d) {
    TheoremReport rep;
    rep.theorem = "consecutive";
    int run_start = -1;
    for (int s = std::max(w.lo, d + 1); s + c <= w.hi; ++s) {
        bool all = true;
        for (int t = 0; t <= c; ++t)
            if (!w.at(s + t).zero) {
                all = false;
                break;
            }
        if (all) {
            run_start = s;
            break;
        }
    }
    if (run_start < 0) {
        rep.verdict = Verdict::Vacuous;
        rep.note = "no run of " + std::to_string(c + 1) + " zeros at indices >= " +
                   std::to_string(d + 1);
        return rep;
    }
    for (int t = 0; t <= c; ++t) rep.hypothesis_indices.push_back(run_start + t);
    for (int i = std::max(w.lo, d + 1); i <= w.hi; ++i) {
        rep.conclusion_indices.push_back(i);
        if (!w.at(i).zero) rep.violation_indices.push_back(i);
    }
    rep.verdict = rep.violation_indices.empty() ? Verdict::Confirmed : Verdict::Violation;
    return rep;
}

namespace {

int find_parity_run(const VanishingWindow& w, int parity, int len) {
    for (int s = w.lo; s + len - 1 <= w.hi; ++s) {
        if (((s % 2) + 2) % 2 != parity) continue;
        bool all = true;
        for (int t = 0; t < len; ++t)
            if (!w.at(s + t).zero) {
                all = false;
                break;
            }
        if (all) return s;
    }
    return w.lo - 1;
}

}  // namespace

TheoremReport scan_torci(const VanishingWindow& w_even, const VanishingWindow& w_odd, int d) {
    TheoremReport rep;
    rep.theorem = "torci";
    int even_start = find_parity_run(w_even, 0, d + 1);
    int odd_start = find_parity_run(w_odd, 1, d + 1);
    if (even_start < w_even.lo || odd_start < w_odd.lo) {
        rep.verdict = Verdict::Vacuous;
        rep.note = "missing an even-start or odd-start run of length " + std::to_string(d + 1);
        return rep;
    }
    for (int t = 0; t <= d; ++t) {
        rep.hypothesis_indices.push_back(even_start + t);
        rep.hypothesis_indices.push_back(odd_start + t);
    }
    bool all_zero = true;
    for (const auto& e : w_even.entries)
        if (!e.zero) all_zero = false;
    for (const auto& e : w_odd.entries)
        if (!e.zero) all_zero = false;
    if (all_zero) {
        rep.verdict = Verdict::Confirmed;
    } else {
        rep.verdict = Verdict::Inconclusive;
        rep.note = "n_0 not effective: the found runs may precede n_0";
    }
    return rep;
}

TheoremReport check_premain(const VanishingWindow& w_R, const VanishingWindow& w_Q, int r) {
    TheoremReport rep;
    rep.theorem = "premain";
    bool any = false;
    for (const auto& e : w_R.entries) {
        if (!e.zero || e.index <= r) continue;
        any = true;
        rep.hypothesis_indices.push_back(e.index);
        for (int i = 0;; ++i) {
            int m = e.index - 2 * i;
            if (r == 0 ? m < 0 : m <= r) break;
            if (!w_Q.contains(m)) {
                rep.skipped.push_back(m);
                continue;
            }
            rep.conclusion_indices.push_back(m);
            if (!w_Q.at(m).zero) rep.violation_indices.push_back(m);
        }
    }
    std::sort(rep.conclusion_indices.begin(), rep.conclusion_indices.end());
    rep.conclusion_indices.erase(
        std::unique(rep.conclusion_indices.begin(), rep.conclusion_indices.end()),
        rep.conclusion_indices.end());
    std::sort(rep.skipped.begin(), rep.skipped.end());
    rep.skipped.erase(std::unique(rep.skipped.begin(), rep.skipped.end()), rep.skipped.end());
    if (!any)
        rep.verdict = Verdict::Vacuous;
    else
        rep.verdict = rep.violation_indices.empty() ? Verdict::Confirmed : Verdict::Violation;
    return rep;
}

TheoremReport check_length_formula(const HypersurfaceTower& tower, const ModulePresentation& M,
                                   const ModulePresentation& N, int n) {
    TheoremReport rep;
    rep.theorem = "length-formula";
    if (n < 0) throw DimensionError("negative homological index");

    HomotopySystem H = higher_homotopies(tower, M, std::max(n, 2), 2);
    PrerigidityReport pr = prerigidity_degree(H, N, 0);
    if (!pr.degree || *pr.degree != 0)
        throw PreconditionUnwitnessed(
            "pre-rigidity degree 0 not witnessed for the canonical system");

    auto torR = tor(M, N, n);
    const TorEntry& lhs = torR[n];
    if (!lhs.finite) {
        rep.verdict = Verdict::Vacuous;
        rep.note = "Tor^R_n does not have finite length";
        return rep;
    }

    ModulePresentation NQ = [&] {
        const PolyMatrix& rel = N.relations();
        PolyMatrix out(tower.Q->field(), tower.Q->nvars(), N.ambient_rank(),
                       rel.cols() + N.ambient_rank());
        for (int i = 0; i < rel.rows(); ++i)
            for (int j = 0; j < rel.cols(); ++j) out.set(i, j, rel.at(i, j));
        for (int i = 0; i < N.ambient_rank(); ++i) out.set(i, rel.cols() + i, tower.x);
        return ModulePresentation(tower.Q, N.ambient_rank(), N.ambient_shifts(), std::move(out));
    }();

    auto torQ = tor(H.M_over_Q, NQ, n);
    std::int64_t rhs = 0;
    rep.hypothesis_indices.push_back(n);
    for (int i = 0; n - 2 * i >= 0; ++i) {
        const TorEntry& term = torQ[n - 2 * i];
        rep.conclusion_indices.push_back(n - 2 * i);
        if (!term.finite) {
            rep.verdict = Verdict::Violation;
            rep.violation_indices.push_back(n - 2 * i);
            rep.note = "a Q-side Tor term has infinite length";
            return rep;
        }
        rhs += term.length;
    }
    if (lhs.length == rhs) {
        rep.verdict = Verdict::Confirmed;
    } else {
        rep.verdict = Verdict::Violation;
        rep.note = "length mismatch: lhs " + std::to_string(lhs.length) + ", rhs " +
                   std::to_string(rhs);
    }
    return rep;
}

std::vector<TheoremReport> check_corollaries(const HypersurfaceTower& tower,
                                             const ModulePresentation& M,
                                             const ModulePresentation& N, int window_hi) {
    std::vector<TheoremReport> out;
    HomotopySystem H = higher_homotopies(tower, M, std::max(window_hi, 2), 2);
    PrerigidityReport pr = prerigidity_degree(H, N, 4);
    if (!pr.degree)
        throw PreconditionUnwitnessed("pre-rigidity degree not witnessed within bound 4");
    const int r = *pr.degree;

    auto torR = tor(M, N, window_hi);
    bool n_zero = N.is_zero_module();

    // (a) Tor^R_n = 0 for some even n >= 0 iff N = 0 (needs r = 0)
    {
        TheoremReport rep;
        rep.theorem = "even-vanishing-iff-zero";
        if (r != 0) {
            rep.verdict = Verdict::Vacuous;
            rep.note = "pre-rigidity degree 0 not witnessed";
        } else {
            bool some_even_zero = false;
            for (int i = 0; i <= window_hi; i += 2) {
                rep.conclusion_indices.push_back(i);
                if (torR[i].zero) some_even_zero = true;
            }
            if (n_zero) {
                rep.verdict = Verdict::Confirmed;
                for (int i = 0; i <= window_hi; ++i)
                    if (!torR[i].zero) {
                        rep.verdict = Verdict::Violation;
                        rep.violation_indices.push_back(i);
                    }
            } else {
                rep.verdict = some_even_zero ? Verdict::Violation : Verdict::Confirmed;
                if (some_even_zero)
                    for (int i = 0; i <= window_hi; i += 2)
                        if (torR[i].zero) rep.violation_indices.push_back(i);
            }
        }
        out.push_back(std::move(rep));
    }

    // (b) finite length at some even index iff M ox N has finite length
    {
        TheoremReport rep;
        rep.theorem = "finite-length-iff-tensor-finite";
        if (r != 0) {
            rep.verdict = Verdict::Vacuous;
            rep.note = "pre-rigidity degree 0 not witnessed";
        } else {
            bool tensor_finite = torR[0].finite;
            bool some_even_finite = false;
            for (int i = 0; i <= window_hi; i += 2)
                if (torR[i].finite) some_even_finite = true;
            rep.verdict = (tensor_finite == some_even_finite) ? Verdict::Confirmed
                                                              : Verdict::Violation;
            rep.note = tensor_finite ? "tensor product has finite length"
                                     : "tensor product has infinite length";
        }
        out.push_back(std::move(rep));
    }

    // (c) two-parity vanishing with b = max{r, depth A - depth M + 1} + c, c = 1
    {
        TheoremReport rep;
        rep.theorem = "two-parity";
        DepthReport dr = depth(M);
        const int c = 1;
        const int b = std::max(r, dr.depth_difference + 1) + c;
        int even_n = -1, odd_n = -1;
        for (int i = b; i <= window_hi; ++i) {
            if (!torR[i].zero) continue;
            if (i % 2 == 0 && even_n < 0) even_n = i;
            if (i % 2 == 1 && odd_n < 0) odd_n = i;
        }
        if (even_n < 0 || odd_n < 0) {
            rep.verdict = Verdict::Vacuous;
            rep.note = "no even+odd vanishing pair at indices >= " + std::to_string(b);
        } else {
            rep.hypothesis_indices = {even_n, odd_n};
            for (int i = dr.depth_difference + 1; i <= window_hi; ++i) {
                rep.conclusion_indices.push_back(i);
                if (!torR[i].zero) rep.violation_indices.push_back(i);
            }
            rep.verdict =
                rep.violation_indices.empty() ? Verdict::Confirmed : Verdict::Violation;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

PaperExampleSpec paper_example(int n, std::uint32_t p) {
    if (n < 1 || n > 3) throw DimensionError("paper example supports 1 <= n <= 3");
    PrimeField F(p);

    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
    Ring ring{F, vars};
    const int nv = 2 * n;

    std::ostringstream text;
    text << "# worked example, n = " << n << "\n";
    text << "field " << p << "\n";
    text << "ring";
    for (const auto& v : vars) text << " " << v;
    text << "\n";
    for (int i = 1; i <= n; ++i) text << "quotient x" << i << "*y" << i << "\n";
    text << "module M cokernel 1 " << n << " [ ";
    for (int i = 1; i <= n; ++i) text << (i > 1 ? ", " : "") << "x" << i;
    text << " ]\n";
    text << "module N cokernel 1 " << n << " [ ";
    for (int i = 1; i <= n; ++i) text << (i > 1 ? ", " : "") << "y" << i;
    text << " ]\n";

    CtxPtr ctx = QuotientRingCtx::polynomial_ring(ring);
    std::vector<HypersurfaceTower> towers;
    for (int i = 0; i < n; ++i) {
        Polynomial xy = Polynomial::variable(F, nv, i).mul(Polynomial::variable(F, nv, n + i));
        HypersurfaceTower t = make_tower(ctx, xy);
        ctx = t.R;
        towers.push_back(std::move(t));
    }

    std::vector<Polynomial> xgens, ygens;
    for (int i = 0; i < n; ++i) {
        xgens.push_back(Polynomial::variable(F, nv, i));
        ygens.push_back(Polynomial::variable(F, nv, n + i));
    }
    ModulePresentation M = ModulePresentation::cyclic(ctx, xgens);
    ModulePresentation N = ModulePresentation::cyclic(ctx, ygens);

    // expected pattern over stable Ext [-8, 8] and ordinary Tor [0, 10]
    std::vector<ManifestEntry> manifest;
    for (int i = 0; i < n; ++i) manifest.push_back({WindowKind::stable_ext, i, true});
    manifest.push_back({WindowKind::stable_ext, -1, false});
    manifest.push_back({WindowKind::stable_ext, n, false});
    for (int i = 1; -2 * i >= -8; ++i) manifest.push_back({WindowKind::stable_ext, -2 * i, true});
    for (int i = 1; -2 * i - 1 >= -8; ++i)
        manifest.push_back({WindowKind::stable_ext, -2 * i - 1, false});
    for (int i = 0; 2 * i <= 10; ++i) manifest.push_back({WindowKind::tor, 2 * i, false});

    return PaperExampleSpec{n,           p, ctx, std::move(towers), std::move(M),
                            std::move(N), text.str(), std::move(manifest)};
}

}  // namespace homcalc
