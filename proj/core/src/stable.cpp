#include "homcalc/stable.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

/* Complete-resolution windows are deterministic, and a wider window agrees
 * with a narrower one on the shared indices, so the widest one computed so
 * far is cached per (module, bound). */
class CompleteResolutionCache {
public:
    static CompleteResolutionCache& instance() {
        static CompleteResolutionCache c;
        return c;
    }

    std::optional<CompleteResolutionWindow> lookup(const std::string& key, int w) {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        const CompleteResolutionWindow& cr = it->second;
        int have_w = -cr.complex.lo;
        if (have_w < w) return std::nullopt;
        return slice(cr, w);
    }

    void store(const std::string& key, const CompleteResolutionWindow& cr) {
        std::unique_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            map_.emplace(key, cr);
        else if (-it->second.complex.lo < -cr.complex.lo)
            it->second = cr;
    }

    static CompleteResolutionWindow slice(const CompleteResolutionWindow& cr, int w) {
        int have_w = -cr.complex.lo;
        if (have_w == w) return cr;
        CompleteResolutionWindow out;
        out.splice_index = cr.splice_index;
        out.d = cr.d;
        FreeComplex& T = out.complex;
        T.lo = -w;
        T.hi = w + cr.d;
        for (int i = T.lo; i <= T.hi; ++i) {
            T.ranks.push_back(cr.complex.rank_at(i));
            T.shifts.push_back(cr.complex.shifts_at(i));
            T.maps.push_back(cr.complex.maps[std::size_t(i - cr.complex.lo)]);
        }
        return out;
    }

private:
    std::shared_mutex mu_;
    std::map<std::string, CompleteResolutionWindow> map_;
};

/* Presentation of M* together with the generator functionals as vectors in
 * the ambient of M (value of each functional on each ambient generator). */
struct DualData {
    HomModule hom;  // generator_vectors live in R^{ambient rank of M}
};

/* The evaluation map M -> M**: generator m_i of M goes to the functional
 * phi -> phi(m_i), whose coordinates in the generators of M** are found by
 * a division lift. */
PolyMatrix evaluation_map(const ModulePresentation& M, const HomModule& Mstar,
                          const HomModule& Mstarstar) {
    const CtxPtr& ctx = M.ctx();
    const PrimeField F = ctx->field();
    const int nv = ctx->nvars();
    const int a = M.ambient_rank();
    const int s = int(Mstar.generator_vectors.size());
    const int t = int(Mstarstar.generator_vectors.size());

    PolyMatrix Psi = elements_to_matrix(Mstarstar.generator_vectors, s, F, nv);
    std::vector<int> psi_shifts(Mstarstar.hom_ambient.shifts);

    PolyMatrix C(F, nv, t, a);
    for (int i = 0; i < a; ++i) {
        // ev(m_i) = ((phi_1)_i, ..., (phi_s)_i) in R^s
        std::vector<Polynomial> ev(s, Polynomial(F, nv));
        for (int kk = 0; kk < s; ++kk)
            ev[kk] = Mstar.generator_vectors[kk].component(i);
        std::vector<Polynomial> w = lift_through(Psi, psi_shifts, ev, *ctx);
        for (int j = 0; j < t; ++j) C.set(j, i, w[j]);
    }
    return C;
}

}  // namespace

GDimReport gdim_zero_check(const ModulePresentation& M, int bound) {
    if (bound < 1) throw DimensionError("gdim bound must be >= 1");
    DepthReport dr = depth(M);
    const int d = dr.depth_difference;
    ModulePresentation C = syzygy_module(M, d);

    GDimReport rep;
    rep.d = d;
    rep.bound = bound;

    HomModule Cstar = dual_module(C);
    HomModule Cstarstar = hom_module(Cstar.pres, ModulePresentation::free_module(M.ctx(), 1));
    PolyMatrix ev = evaluation_map(C, Cstar, Cstarstar);
    if (!induced_map_is_isomorphism(ev, C, Cstarstar.pres))
        throw ReflexivityFailure("canonical map to the double dual is not bijective");
    rep.reflexive = true;

    ModulePresentation Rfree = ModulePresentation::free_module(M.ctx(), 1);
    auto exts = ext_modules(C, Rfree, bound);
    for (int n = 1; n <= bound; ++n)
        if (!exts[n].is_zero())
            throw ExtNonvanishing(n, "Ext^" + std::to_string(n) + "(C, A) is nonzero");
    rep.ext_vanishing = true;
    auto dual_exts = ext_modules(Cstar.pres, Rfree, bound);
    for (int n = 1; n <= bound; ++n)
        if (!dual_exts[n].is_zero())
            throw ExtNonvanishing(n, "Ext^" + std::to_string(n) + "(C*, A) is nonzero");
    rep.dual_ext_vanishing = true;
    return rep;
}

CompleteResolutionWindow complete_resolution(const ModulePresentation& M, int w, int bound) {
    if (w < 1) throw DimensionError("complete resolution width must be >= 1");
    std::string cache_key = M.key() + "#b" + std::to_string(bound);
    if (auto hit = CompleteResolutionCache::instance().lookup(cache_key, w)) return *hit;
    gdim_zero_check(M, bound);
    const CtxPtr& ctx = M.ctx();
    const PrimeField F = ctx->field();
    const int nv = ctx->nvars();
    const int d = depth(M).depth_difference;

    ResolutionWindow pos = minimal_resolution(M, std::max(w + d, d + 1));
    ModulePresentation C = syzygy_module(M, d);
    HomModule Cstar = dual_module(C);

    // minimal resolution of C*; its dual is the negative side
    ResolutionWindow neg = minimal_resolution(Cstar.pres, w + std::max(d, 1));

    // splice matrix P : F_d -> S_0^*, P[l][mu] = (psi_{kept l})(c_mu)
    const int a_d = pos.complex.rank_at(d);
    const int s0 = neg.complex.rank_at(0);
    PolyMatrix splice(F, nv, s0, a_d);
    for (int l = 0; l < s0; ++l) {
        const ModuleElement& psi = Cstar.generator_vectors[neg.aug_kept[l]];
        for (int mu = 0; mu < a_d; ++mu) splice.set(l, mu, ctx->reduce(psi.component(mu)));
    }

    FreeComplex T;
    T.lo = -w;
    T.hi = w + d;
    const int n = T.hi - T.lo + 1;
    T.ranks.assign(n, 0);
    T.shifts.assign(n, {});
    T.maps.assign(n, PolyMatrix(F, nv, 0, 0));
    for (int i = d; i <= T.hi; ++i) {
        T.ranks[i - T.lo] = pos.complex.rank_at(i);
        T.shifts[i - T.lo] = pos.complex.shifts_at(i);
    }
    for (int i = T.lo; i < d; ++i) {
        int j = d - 1 - i;
        T.ranks[i - T.lo] = neg.complex.rank_at(j);
        const auto& sj = neg.complex.shifts_at(j);
        std::vector<int> flipped;
        for (int sft : sj) flipped.push_back(-sft);
        T.shifts[i - T.lo] = std::move(flipped);
    }
    for (int i = d + 1; i <= T.hi; ++i) T.maps[i - T.lo] = pos.complex.map_at(i);
    T.maps[d - T.lo] = std::move(splice);
    for (int i = T.lo + 1; i < d; ++i)
        T.maps[i - T.lo] = neg.complex.map_at(d - i).transpose();

    minimalize_window(T, *ctx);

    if (!complex_squares_to_zero(T, *ctx))
        throw ExactnessFailure(0, "spliced window is not a complex");
    for (int i = T.lo + 1; i < T.hi; ++i)
        if (!homology_zero_at(T, i, *ctx))
            throw ExactnessFailure(i, "spliced window has homology at index " + std::to_string(i));

    CompleteResolutionWindow out{std::move(T), d, d};
    CompleteResolutionCache::instance().store(cache_key, out);
    return out;
}

const StableEntry& StableWindow::at(int index) const {
    for (const auto& e : entries)
        if (e.index == index) return e;
    throw DimensionError("stable window index out of range");
}

namespace {

StableWindow stable_window(const ModulePresentation& M, const ModulePresentation& N, int lo,
                           int hi, int bound, PairingKind kind) {
    if (!M.ctx()->same_ring(*N.ctx()))
        throw RingMismatchError("stable pairing over different rings");
    if (lo > hi) throw DimensionError("empty stable window");
    const int d = depth(M).depth_difference;
    // one index of slack on each side: T must cover [lo-1, hi+1]
    int w = std::max({1, -(lo - 1), (hi + 1) - d});
    CompleteResolutionWindow cr = complete_resolution(M, w, bound);

    StableWindow out;
    out.kind = kind;
    out.lo = lo;
    out.hi = hi;
    for (int i = lo; i <= hi; ++i) {
        HomologyModule H = (kind == PairingKind::tor) ? tensor_homology(cr.complex, i, N)
                                                      : hom_cohomology(cr.complex, i, N);
        TorEntry e = entry_of(H, i);
        out.entries.push_back(StableEntry{i, e.zero, e.finite, e.length});
    }
    return out;
}

}  // namespace

StableWindow stable_tor(const ModulePresentation& M, const ModulePresentation& N, int lo, int hi,
                        int bound) {
    return stable_window(M, N, lo, hi, bound, PairingKind::tor);
}

StableWindow stable_ext(const ModulePresentation& M, const ModulePresentation& N, int lo, int hi,
                        int bound) {
    return stable_window(M, N, lo, hi, bound, PairingKind::ext);
}

DualityReport duality_check(const ModulePresentation& M, const ModulePresentation& N, int lo,
                            int hi, int bound) {
    DepthReport dr = depth(M);
    if (dr.depth_difference != 0)
        throw NotMCMError("duality check requires a maximal Cohen-Macaulay module");
    HomModule Mstar = dual_module(M);
    StableWindow tors = stable_tor(M, N, lo, hi, bound);
    StableWindow exts = stable_ext(Mstar.pres, N, -hi - 1, -lo - 1, bound);

    DualityReport rep;
    rep.lo = lo;
    rep.hi = hi;
    for (int i = lo; i <= hi; ++i) {
        const StableEntry& t = tors.at(i);
        const StableEntry& e = exts.at(-i - 1);
        bool match = t.zero == e.zero && t.finite == e.finite &&
                     (!t.finite || t.length == e.length);
        if (!match) rep.mismatched_indices.push_back(i);
    }
    rep.all_match = rep.mismatched_indices.empty();
    return rep;
}

}  // namespace homcalc
