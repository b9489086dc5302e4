#include "homcalc/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

ModulePresentation::ModulePresentation(CtxPtr ctx, int ambient_rank,
                                       std::vector<int> ambient_shifts, PolyMatrix relations)
    : ctx_(std::move(ctx)), rank_(ambient_rank), shifts_(std::move(ambient_shifts)),
      relations_(ctx_->reduce(relations)), relation_gb_{ambient_rank, {}} {
    if (shifts_.empty()) shifts_.assign(rank_, 0);
    if (int(shifts_.size()) != rank_) throw DimensionError("ambient shift count mismatch");
    if (relations_.rows() != rank_) throw DimensionError("relation matrix row count mismatch");
    FreeModule fm{rank_, shifts_};
    std::vector<ModuleElement> gens;
    for (int j = 0; j < relations_.cols(); ++j) {
        ModuleElement c = ModuleElement::from_column(relations_.column(j), ctx_->field(),
                                                     ctx_->nvars());
        if (!c.is_homogeneous(fm))
            throw InhomogeneousError("relation column " + std::to_string(j) +
                                     " is inhomogeneous for the ambient shifts");
        gens.push_back(std::move(c));
    }
    for (auto& m : ideal_multiples(*ctx_, rank_)) gens.push_back(std::move(m));
    relation_gb_ = buchberger(gens, ctx_->field(), ctx_->nvars(), fm);

    std::ostringstream sig;
    sig << ctx_->key() << "|r=" << rank_ << "|s=";
    for (int s : shifts_) sig << s << ",";
    sig << "|rel=";
    for (int i = 0; i < relations_.rows(); ++i)
        for (int j = 0; j < relations_.cols(); ++j)
            sig << polynomial_to_string(relations_.at(i, j), ctx_->ring()) << ";";
    std::ostringstream k;
    k << std::hex << fnv1a(sig.str());
    key_ = k.str();
}

ModulePresentation ModulePresentation::free_module(const CtxPtr& ctx, int rank,
                                                   std::vector<int> shifts) {
    if (shifts.empty()) shifts.assign(rank, 0);
    return ModulePresentation(ctx, rank, std::move(shifts),
                              PolyMatrix(ctx->field(), ctx->nvars(), rank, 0));
}

ModulePresentation ModulePresentation::cyclic(const CtxPtr& ctx,
                                              const std::vector<Polynomial>& relations) {
    PolyMatrix rel(ctx->field(), ctx->nvars(), 1, int(relations.size()));
    for (std::size_t j = 0; j < relations.size(); ++j) rel.set(0, int(j), relations[j]);
    return ModulePresentation(ctx, 1, {0}, std::move(rel));
}

ModulePresentation ModulePresentation::zero_module(const CtxPtr& ctx) {
    PolyMatrix rel(ctx->field(), ctx->nvars(), 1, 1);
    rel.set(0, 0, Polynomial::constant(ctx->field(), ctx->nvars(), 1));
    return ModulePresentation(ctx, 1, {0}, std::move(rel));
}

ModulePresentation ModulePresentation::residue_field(const CtxPtr& ctx) {
    std::vector<Polynomial> vars;
    for (int i = 0; i < ctx->nvars(); ++i)
        vars.push_back(Polynomial::variable(ctx->field(), ctx->nvars(), i));
    return cyclic(ctx, vars);
}

bool ModulePresentation::element_is_zero(const ModuleElement& v) const {
    return normal_form(v, relation_gb_).is_zero();
}

bool ModulePresentation::is_zero_module() const {
    for (int c = 0; c < rank_; ++c)
        if (!element_is_zero(ModuleElement::basis_vector(ctx_->field(), ctx_->nvars(), rank_, c)))
            return false;
    return true;
}

// ---------------------------------------------------------------------------

MinimalizedPresentation minimalize_presentation(const ModulePresentation& M) {
    const CtxPtr& ctx = M.ctx();
    const PrimeField F = ctx->field();
    const int nv = ctx->nvars();

    int rank = M.ambient_rank();
    std::vector<int> shifts = M.ambient_shifts();
    PolyMatrix A = M.relations();
    std::vector<int> kept(rank);
    for (int i = 0; i < rank; ++i) kept[i] = i;
    // expr columns: original generators written in the current basis
    PolyMatrix expr = PolyMatrix::identity(F, nv, rank);

    for (;;) {
        int pr = -1, pc = -1;
        for (int i = 0; i < A.rows() && pr < 0; ++i)
            for (int j = 0; j < A.cols(); ++j)
                if (A.at(i, j).is_unit_constant()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;

        std::uint32_t u = A.at(pr, pc).lead().coeff;
        std::uint32_t uinv = F.inv(u);
        // relation column pc: u*e_pr + sum_k A[k][pc]*e_k = 0, so
        // e_pr = -u^{-1} * sum_{k != pr} A[k][pc]*e_k.
        std::vector<Polynomial> subst(A.rows(), Polynomial(F, nv));
        for (int k = 0; k < A.rows(); ++k) {
            if (k == pr) continue;
            subst[k] = A.at(k, pc).scale(F.neg(uinv));
        }
        // rewrite the other relation columns
        PolyMatrix A2(F, nv, A.rows() - 1, A.cols() - 1);
        int jj = 0;
        for (int j = 0; j < A.cols(); ++j) {
            if (j == pc) continue;
            const Polynomial& c = A.at(pr, j);
            int ii = 0;
            for (int i = 0; i < A.rows(); ++i) {
                if (i == pr) continue;
                Polynomial e = A.at(i, j);
                if (!c.is_zero() && !subst[i].is_zero()) e = e.add(c.mul(subst[i]));
                A2.set(ii, jj, ctx->reduce(e));
                ++ii;
            }
            ++jj;
        }
        // rewrite the expression matrix the same way
        PolyMatrix E2(F, nv, expr.rows() - 1, expr.cols());
        for (int j = 0; j < expr.cols(); ++j) {
            const Polynomial& c = expr.at(pr, j);
            int ii = 0;
            for (int i = 0; i < expr.rows(); ++i) {
                if (i == pr) continue;
                Polynomial e = expr.at(i, j);
                if (!c.is_zero() && !subst[i].is_zero()) e = e.add(c.mul(subst[i]));
                E2.set(ii, j, ctx->reduce(e));
                ++ii;
            }
        }
        A = std::move(A2);
        expr = std::move(E2);
        shifts.erase(shifts.begin() + pr);
        kept.erase(kept.begin() + pr);
    }

    // extract a minimal generating set for the relation submodule
    FreeModule fm{A.rows(), shifts};
    std::vector<ModuleElement> cand = matrix_columns(A);
    std::vector<ModuleElement> mins = minimal_generators(std::move(cand), fm, *ctx);
    PolyMatrix rel = elements_to_matrix(mins, A.rows(), F, nv);

    return MinimalizedPresentation{
        ModulePresentation(ctx, A.rows(), shifts, std::move(rel)), std::move(kept),
        std::move(expr)};
}

std::vector<ModuleElement> minimal_generators(std::vector<ModuleElement> candidates,
                                              const FreeModule& target,
                                              const QuotientRingCtx& ctx) {
    std::vector<ModuleElement> reduced;
    for (auto& c : candidates) {
        ModuleElement r = ctx.reduce(c);
        if (!r.is_zero()) reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        int da = a.degree(target), db = b.degree(target);
        if (da != db) return da < db;
        return ModuleElement::element_less(a, b);
    });
    GroebnerBuilder span(ctx.field(), ctx.nvars(), target);
    for (auto& m : ideal_multiples(ctx, target.rank)) span.add_generator(m);
    span.complete();
    std::vector<ModuleElement> kept;
    for (const auto& c : reduced) {
        if (span.normal_form(c).is_zero()) continue;
        kept.push_back(c);
        span.add_generator(c);
        span.complete();
    }
    return kept;
}

// ---------------------------------------------------------------------------

std::vector<ModuleElement> induced_map_kernel(const PolyMatrix& C, const ModulePresentation& src,
                                              const ModulePresentation& dst) {
    if (C.rows() != dst.ambient_rank() || C.cols() != src.ambient_rank())
        throw DimensionError("induced map shape mismatch");
    const auto& ctx = *src.ctx();
    // v with C v in the relation span of dst, i.e. kernel of the composite
    std::vector<ModuleElement> tracked;
    std::vector<int> nonzero_index;
    std::vector<ModuleElement> out;
    for (int j = 0; j < C.cols(); ++j) {
        ModuleElement c = ctx.reduce(
            ModuleElement::from_column(C.column(j), C.field(), C.nvars()));
        if (c.is_zero()) {
            out.push_back(ModuleElement::basis_vector(C.field(), C.nvars(), C.cols(), j));
        } else {
            tracked.push_back(std::move(c));
            nonzero_index.push_back(j);
        }
    }
    std::vector<ModuleElement> aux = matrix_columns(dst.relations());
    std::vector<ModuleElement> syz =
        relative_syzygies(tracked, aux, dst.ambient(), ctx);
    for (const auto& s : syz) {
        std::vector<ModuleTerm> terms;
        for (const auto& t : s.terms()) terms.push_back({nonzero_index[t.comp], t.mon, t.coeff});
        out.push_back(ModuleElement::from_terms(C.field(), C.nvars(), C.cols(), std::move(terms)));
    }
    std::sort(out.begin(), out.end(), ModuleElement::element_less);
    return out;
}

bool induced_map_is_injective(const PolyMatrix& C, const ModulePresentation& src,
                              const ModulePresentation& dst) {
    for (const auto& v : induced_map_kernel(C, src, dst))
        if (!src.element_is_zero(v)) return false;
    return true;
}

bool induced_map_is_surjective(const PolyMatrix& C, const ModulePresentation& src,
                               const ModulePresentation& dst) {
    const auto& ctx = *src.ctx();
    std::vector<ModuleElement> gens = matrix_columns(C);
    for (auto& m : matrix_columns(dst.relations())) gens.push_back(std::move(m));
    for (auto& m : ideal_multiples(ctx, dst.ambient_rank())) gens.push_back(std::move(m));
    GroebnerBuilder b(ctx.field(), ctx.nvars(), dst.ambient());
    for (const auto& g : gens) b.add_generator(g);
    b.complete();
    for (int c = 0; c < dst.ambient_rank(); ++c) {
        ModuleElement e =
            ModuleElement::basis_vector(ctx.field(), ctx.nvars(), dst.ambient_rank(), c);
        if (!b.normal_form(e).is_zero()) return false;
    }
    return true;
}

bool induced_map_is_isomorphism(const PolyMatrix& C, const ModulePresentation& src,
                                const ModulePresentation& dst) {
    return induced_map_is_surjective(C, src, dst) && induced_map_is_injective(C, src, dst);
}

}  // namespace homcalc
