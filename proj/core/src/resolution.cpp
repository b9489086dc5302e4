#include "homcalc/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

/* Memo cache for minimal resolutions, keyed by the presentation's content
 * hash. Windows are computed stepwise and deterministically, so a longer
 * cached window can be sliced for shorter requests. */
class ResolutionCache {
public:
    static ResolutionCache& instance() {
        static ResolutionCache c;
        return c;
    }

    std::optional<ResolutionWindow> lookup(const std::string& key, int steps) {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end() || it->second.steps() < steps) return std::nullopt;
        return slice(it->second, steps);
    }

    void store(const std::string& key, const ResolutionWindow& rw) {
        std::unique_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            map_.emplace(key, rw);
        else if (it->second.steps() < rw.steps())
            it->second = rw;
    }

    static ResolutionWindow slice(const ResolutionWindow& rw, int steps) {
        if (rw.steps() == steps) return rw;
        ResolutionWindow out = rw;
        out.complex.hi = steps;
        out.complex.ranks.resize(steps + 1);
        out.complex.shifts.resize(steps + 1);
        out.complex.maps.resize(steps + 1, PolyMatrix(rw.aug_expr.field(),
                                                      rw.aug_expr.nvars(), 0, 0));
        return out;
    }

private:
    std::shared_mutex mu_;
    std::map<std::string, ResolutionWindow> map_;
};

}  // namespace

ResolutionWindow minimal_resolution(const ModulePresentation& M, int steps) {
    if (steps < 0) throw DimensionError("resolution steps must be >= 0");
    std::string key = M.key();
    if (auto hit = ResolutionCache::instance().lookup(key, steps)) return *hit;

    const CtxPtr& ctx = M.ctx();
    const PrimeField F = ctx->field();
    const int nv = ctx->nvars();

    MinimalizedPresentation mp = minimalize_presentation(M);
    FreeComplex c;
    c.lo = 0;
    c.hi = steps;
    c.ranks.assign(steps + 1, 0);
    c.shifts.assign(steps + 1, {});
    c.maps.assign(steps + 1, PolyMatrix(F, nv, 0, 0));
    c.ranks[0] = mp.pres.ambient_rank();
    c.shifts[0] = mp.pres.ambient_shifts();

    if (steps >= 1) {
        // relations of the minimalized presentation are already a minimal
        // generating set of the relation submodule
        const PolyMatrix& rel = mp.pres.relations();
        c.maps[1] = rel;
        c.ranks[1] = rel.cols();
        FreeModule f0{c.ranks[0], c.shifts[0]};
        for (int j = 0; j < rel.cols(); ++j) {
            ModuleElement col = ModuleElement::from_column(rel.column(j), F, nv);
            c.shifts[1].push_back(col.degree(f0));
        }
    }
    for (int s = 2; s <= steps; ++s) {
        if (c.ranks[s - 1] == 0) break;  // ranks and maps stay zero from here on
        std::vector<ModuleElement> ker =
            kernel(c.maps[s - 1], c.shifts[s - 2], *ctx);
        FreeModule fm{c.ranks[s - 1], c.shifts[s - 1]};
        std::vector<ModuleElement> gens = minimal_generators(std::move(ker), fm, *ctx);
        c.maps[s] = elements_to_matrix(gens, c.ranks[s - 1], F, nv);
        c.ranks[s] = int(gens.size());
        for (const auto& g : gens) c.shifts[s].push_back(g.degree(fm));
        if (gens.empty()) {
            c.maps[s] = PolyMatrix(F, nv, c.ranks[s - 1], 0);
            break;
        }
    }
    // normalize trailing zero maps so shapes stay conformable
    for (int s = 1; s <= steps; ++s) {
        if (c.maps[s].rows() != c.ranks[s - 1] || c.maps[s].cols() != c.ranks[s])
            c.maps[s] = PolyMatrix(F, nv, c.ranks[s - 1], c.ranks[s]);
    }

    ResolutionWindow rw{std::move(c), true, mp.kept, mp.expr};
    ResolutionCache::instance().store(key, rw);
    return rw;
}

ModulePresentation syzygy_module(const ModulePresentation& M, int d) {
    if (d < 0) throw DimensionError("negative syzygy index");
    ResolutionWindow rw = minimal_resolution(M, d + 1);
    const FreeComplex& c = rw.complex;
    return ModulePresentation(M.ctx(), c.rank_at(d), c.shifts_at(d), c.map_at(d + 1));
}

BettiTable betti(const ModulePresentation& M, int steps) {
    ResolutionWindow rw = minimal_resolution(M, steps);
    return BettiTable{rw.ranks()};
}

ComplexityEstimate complexity_estimate(const BettiTable& B) {
    const int n = int(B.values.size());
    if (n < 4) throw WindowTooShortError("complexity estimate needs a window of length >= 4");
    std::vector<std::int64_t> diff = B.values;
    int need = (n + 1) / 2;
    for (int t = 0; t < n; ++t) {
        int run = 0;
        for (int i = int(diff.size()) - 1; i >= 0 && diff[i] == 0; --i) ++run;
        if (run > 0) return ComplexityEstimate{t, n, run >= std::min<int>(need, int(diff.size()))};
        std::vector<std::int64_t> next;
        for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
        diff = std::move(next);
        if (diff.empty()) break;
    }
    return ComplexityEstimate{n, n, false};
}

// ---------------------------------------------------------------------------
// Subquotients

bool HomologyModule::is_zero() const {
    if (cycles.empty()) return true;
    GroebnerBuilder b(ctx->field(), ctx->nvars(), ambient);
    for (const auto& g : boundaries) b.add_generator(ctx->reduce(g));
    for (const auto& m : ideal_multiples(*ctx, ambient.rank)) b.add_generator(m);
    b.complete();
    for (const auto& z : cycles)
        if (!b.normal_form(z).is_zero()) return false;
    return true;
}

ModulePresentation HomologyModule::presentation() const {
    const int k = int(cycles.size());
    if (k == 0) return ModulePresentation::zero_module(ctx);
    std::vector<int> gshifts;
    for (const auto& z : cycles) gshifts.push_back(z.degree(ambient));
    std::vector<ModuleElement> rels = relative_syzygies(cycles, boundaries, ambient, *ctx);
    PolyMatrix rel = elements_to_matrix(rels, k, ctx->field(), ctx->nvars());
    return ModulePresentation(ctx, k, gshifts, std::move(rel));
}

// ---------------------------------------------------------------------------
// Hilbert data

HilbertData length_or_hilbert(const ModulePresentation& M, int degree_bound) {
    const auto& gb = M.relation_gb();
    const int nv = M.ctx()->nvars();
    const int rank = M.ambient_rank();

    // lead terms per component
    std::vector<std::vector<Monomial>> leads(rank);
    for (const auto& g : gb.gens) leads[g.lead().comp].push_back(g.lead().mon);

    auto standard = [&](int comp, const Monomial& m) {
        for (const auto& l : leads[comp])
            if (l.divides(m)) return false;
        return true;
    };

    // finite iff every component's lead set contains a pure power of every variable
    bool finite = true;
    std::vector<std::vector<int>> bounds(rank, std::vector<int>(nv, -1));
    for (int c = 0; c < rank && finite; ++c) {
        for (int v = 0; v < nv && finite; ++v) {
            int best = -1;
            for (const auto& l : leads[c]) {
                bool pure = true;
                for (int w = 0; w < nv; ++w)
                    if (w != v && l.exponent(w) > 0) {
                        pure = false;
                        break;
                    }
                if (pure && (best < 0 || l.exponent(v) < best)) best = l.exponent(v);
            }
            if (best < 0)
                finite = false;
            else
                bounds[c][v] = best;
        }
    }

    HilbertData out;
    out.finite_length = finite;
    if (finite) {
        std::int64_t count = 0;
        for (int c = 0; c < rank; ++c) {
            std::vector<std::int32_t> e(nv, 0);
            // enumerate exponent boxes below the pure-power bounds
            std::function<void(int)> rec = [&](int v) {
                if (v == nv) {
                    if (standard(c, Monomial::from_exponents(e))) ++count;
                    return;
                }
                for (int i = 0; i < bounds[c][v]; ++i) {
                    e[v] = i;
                    rec(v + 1);
                }
                e[v] = 0;
            };
            rec(0);
        }
        out.length = count;
    }
    // Hilbert values through the bound (also filled in the finite case)
    int lo = 0;
    for (int s : M.ambient_shifts()) lo = std::min(lo, s);
    out.degree_lo = lo;
    for (int d = lo; d <= degree_bound; ++d) {
        std::int64_t h = 0;
        for (int c = 0; c < rank; ++c) {
            int md = d - M.ambient_shifts()[c];
            if (md < 0) continue;
            std::vector<std::int32_t> e(nv, 0);
            std::function<void(int, int)> rec = [&](int v, int left) {
                if (v == nv - 1) {
                    e[v] = left;
                    if (standard(c, Monomial::from_exponents(e))) ++h;
                    e[v] = 0;
                    return;
                }
                for (int i = 0; i <= left; ++i) {
                    e[v] = i;
                    rec(v + 1, left - i);
                }
                e[v] = 0;
            };
            if (nv == 0) {
                if (md == 0) ++h;
            } else {
                rec(0, md);
            }
        }
        out.values.push_back(h);
    }
    return out;
}

TorEntry entry_of(const HomologyModule& H, int index) {
    if (H.is_zero()) return TorEntry{index, true, true, 0};
    // length only; the Hilbert-value window is skipped with the -1 bound
    HilbertData hd = length_or_hilbert(H.presentation(), -1);
    return TorEntry{index, false, hd.finite_length, hd.length};
}

// ---------------------------------------------------------------------------
// Tor / Ext via tensored and hommed complexes

namespace {

std::vector<ModuleElement> all_basis_vectors(const QuotientRingCtx& ctx, int rank) {
    std::vector<ModuleElement> out;
    for (int c = 0; c < rank; ++c)
        out.push_back(ModuleElement::basis_vector(ctx.field(), ctx.nvars(), rank, c));
    return out;
}

/* Generators of { v : D v in im(I tensor B) } over R, i.e. the cycles of a
 * map between N-tensored free modules. */
std::vector<ModuleElement> relative_kernel(const PolyMatrix& D,
                                           const std::vector<int>& target_shifts,
                                           const std::vector<ModuleElement>& target_aux,
                                           const QuotientRingCtx& ctx) {
    std::vector<ModuleElement> tracked;
    std::vector<int> nonzero_index;
    std::vector<ModuleElement> out;
    for (int j = 0; j < D.cols(); ++j) {
        ModuleElement c =
            ctx.reduce(ModuleElement::from_column(D.column(j), D.field(), D.nvars()));
        if (c.is_zero()) {
            out.push_back(ModuleElement::basis_vector(D.field(), D.nvars(), D.cols(), j));
        } else {
            tracked.push_back(std::move(c));
            nonzero_index.push_back(j);
        }
    }
    FreeModule target{D.rows(), target_shifts};
    std::vector<ModuleElement> syz = relative_syzygies(tracked, target_aux, target, ctx);
    for (const auto& s : syz) {
        std::vector<ModuleTerm> terms;
        for (const auto& t : s.terms()) terms.push_back({nonzero_index[t.comp], t.mon, t.coeff});
        out.push_back(ModuleElement::from_terms(D.field(), D.nvars(), D.cols(), std::move(terms)));
    }
    std::sort(out.begin(), out.end(), ModuleElement::element_less);
    return out;
}

std::vector<int> tensor_shifts(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() * b.size());
    for (int sa : a)
        for (int sb : b) out.push_back(sa + sb);
    return out;
}

std::vector<int> hom_shifts(const std::vector<int>& from, const std::vector<int>& n_shifts) {
    std::vector<int> out;
    out.reserve(from.size() * n_shifts.size());
    for (int sf : from)
        for (int sn : n_shifts) out.push_back(sn - sf);
    return out;
}

}  // namespace

HomologyModule tensor_homology(const FreeComplex& T, int index, const ModulePresentation& N) {
    const CtxPtr& ctx = N.ctx();
    const PrimeField F = ctx->field();
    const int nv = ctx->nvars();
    const int r = N.ambient_rank();
    if (!(index > T.lo && index < T.hi))
        throw DimensionError("tensor homology index needs one index of slack on each side");

    const int a = T.rank_at(index);
    const int aprev = T.rank_at(index - 1);
    const int anext = T.rank_at(index + 1);
    FreeModule ambient{a * r, tensor_shifts(T.shifts_at(index), N.ambient_shifts())};

    HomologyModule H{ctx, ambient, {}, {}};
    if (a == 0) return H;

    PolyMatrix Ir = PolyMatrix::identity(F, nv, r);
    if (aprev == 0) {
        H.cycles = all_basis_vectors(*ctx, a * r);
    } else {
        PolyMatrix D = PolyMatrix::kronecker(T.map_at(index), Ir);
        std::vector<int> tgt = tensor_shifts(T.shifts_at(index - 1), N.ambient_shifts());
        std::vector<ModuleElement> aux = matrix_columns(
            PolyMatrix::kronecker(PolyMatrix::identity(F, nv, aprev), N.relations()));
        H.cycles = relative_kernel(D, tgt, aux, *ctx);
    }
    if (anext > 0)
        H.boundaries = matrix_columns(PolyMatrix::kronecker(T.map_at(index + 1), Ir));
    for (auto& b : matrix_columns(
             PolyMatrix::kronecker(PolyMatrix::identity(F, nv, a), N.relations())))
        H.boundaries.push_back(std::move(b));
    return H;
}

HomologyModule hom_cohomology(const FreeComplex& T, int index, const ModulePresentation& N) {
    const CtxPtr& ctx = N.ctx();
    const PrimeField F = ctx->field();
    const int nv = ctx->nvars();
    const int r = N.ambient_rank();
    if (!(index > T.lo && index < T.hi))
        throw DimensionError("hom cohomology index needs one index of slack on each side");

    const int a = T.rank_at(index);
    const int aprev = T.rank_at(index - 1);
    const int anext = T.rank_at(index + 1);
    FreeModule ambient{a * r, hom_shifts(T.shifts_at(index), N.ambient_shifts())};

    HomologyModule H{ctx, ambient, {}, {}};
    if (a == 0) return H;

    PolyMatrix Ir = PolyMatrix::identity(F, nv, r);
    if (anext == 0) {
        H.cycles = all_basis_vectors(*ctx, a * r);
    } else {
        PolyMatrix D = PolyMatrix::kronecker(T.map_at(index + 1).transpose(), Ir);
        std::vector<int> tgt = hom_shifts(T.shifts_at(index + 1), N.ambient_shifts());
        std::vector<ModuleElement> aux = matrix_columns(
            PolyMatrix::kronecker(PolyMatrix::identity(F, nv, anext), N.relations()));
        H.cycles = relative_kernel(D, tgt, aux, *ctx);
    }
    if (aprev > 0)
        H.boundaries =
            matrix_columns(PolyMatrix::kronecker(T.map_at(index).transpose(), Ir));
    for (auto& b : matrix_columns(
             PolyMatrix::kronecker(PolyMatrix::identity(F, nv, a), N.relations())))
        H.boundaries.push_back(std::move(b));
    return H;
}

namespace {

/* Extend a resolution complex by one slot on each side so homology at the
 * window edges is computable: index -1 gets rank 0, index hi+1 must come
 * from the resolution itself. */
FreeComplex tor_complex(const ModulePresentation& M, int hi) {
    ResolutionWindow rw = minimal_resolution(M, hi + 1);
    FreeComplex c = rw.complex;
    const PrimeField F = M.ctx()->field();
    const int nv = M.ctx()->nvars();
    // prepend index -1 with rank 0
    c.lo = -1;
    c.ranks.insert(c.ranks.begin(), 0);
    c.shifts.insert(c.shifts.begin(), std::vector<int>());
    c.maps.insert(c.maps.begin(), PolyMatrix(F, nv, 0, 0));
    // now maps[1] is d_0 : F_0 -> 0
    c.maps[1] = PolyMatrix(F, nv, 0, c.rank_at(0));
    return c;
}

}  // namespace

std::vector<HomologyModule> tor_modules(const ModulePresentation& M, const ModulePresentation& N,
                                        int hi) {
    if (!M.ctx()->same_ring(*N.ctx())) throw RingMismatchError("tor over different rings");
    FreeComplex c = tor_complex(M, hi);
    std::vector<HomologyModule> out;
    for (int i = 0; i <= hi; ++i) out.push_back(tensor_homology(c, i, N));
    return out;
}

std::vector<HomologyModule> ext_modules(const ModulePresentation& M, const ModulePresentation& N,
                                        int hi) {
    if (!M.ctx()->same_ring(*N.ctx())) throw RingMismatchError("ext over different rings");
    FreeComplex c = tor_complex(M, hi);
    std::vector<HomologyModule> out;
    for (int i = 0; i <= hi; ++i) out.push_back(hom_cohomology(c, i, N));
    return out;
}

std::vector<TorEntry> tor(const ModulePresentation& M, const ModulePresentation& N, int hi) {
    std::vector<TorEntry> out;
    auto mods = tor_modules(M, N, hi);
    for (int i = 0; i <= hi; ++i) out.push_back(entry_of(mods[i], i));
    return out;
}

std::vector<TorEntry> ext(const ModulePresentation& M, const ModulePresentation& N, int hi) {
    std::vector<TorEntry> out;
    auto mods = ext_modules(M, N, hi);
    for (int i = 0; i <= hi; ++i) out.push_back(entry_of(mods[i], i));
    return out;
}

// ---------------------------------------------------------------------------
// Hom modules and depth

HomModule hom_module(const ModulePresentation& M, const ModulePresentation& N) {
    if (!M.ctx()->same_ring(*N.ctx())) throw RingMismatchError("hom over different rings");
    FreeComplex c = tor_complex(M, 0);  // resolution through step 1 with the -1 pad
    HomologyModule H = hom_cohomology(c, 0, N);
    ModulePresentation pres = H.presentation();
    return HomModule{std::move(pres), H.cycles, H.ambient};
}

HomModule dual_module(const ModulePresentation& M) {
    return hom_module(M, ModulePresentation::free_module(M.ctx(), 1));
}

namespace {

class DepthCache {
public:
    static DepthCache& instance() {
        static DepthCache c;
        return c;
    }
    std::optional<DepthReport> lookup(const std::string& key) {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void store(const std::string& key, const DepthReport& r) {
        std::unique_lock lock(mu_);
        map_[key] = r;
    }

private:
    std::shared_mutex mu_;
    std::map<std::string, DepthReport> map_;
};

}  // namespace

DepthReport depth(const ModulePresentation& M, int ring_dim_bound) {
    const CtxPtr& ctx = M.ctx();
    int bound = ring_dim_bound >= 0 ? ring_dim_bound : ctx->nvars();
    std::string cache_key = M.key() + "#d" + std::to_string(bound);
    if (auto hit = DepthCache::instance().lookup(cache_key)) return *hit;
    ModulePresentation k = ModulePresentation::residue_field(ctx);
    ModulePresentation Rfree = ModulePresentation::free_module(ctx, 1);

    FreeComplex kres = tor_complex(k, bound);
    auto first_nonvanishing = [&](const ModulePresentation& target) {
        for (int i = 0; i <= bound; ++i)
            if (!hom_cohomology(kres, i, target).is_zero()) return i;
        throw NoNonvanishingError("no nonzero Ext(k, -) within the bound " +
                                  std::to_string(bound));
    };

    DepthReport rep;
    rep.depth = first_nonvanishing(M);
    rep.witness = rep.depth;
    rep.ring_depth = first_nonvanishing(Rfree);
    rep.depth_difference = rep.ring_depth - rep.depth;
    DepthCache::instance().store(cache_key, rep);
    return rep;
}

}  // namespace homcalc
