#ifndef HOMCALC_PRESENTATION_HPP
#define HOMCALC_PRESENTATION_HPP

#include <memory>
#include <vector>

#include "homcalc/groebner.hpp"

namespace homcalc {

/* A finitely generated graded module over the ring of ctx, given as the
 * cokernel of a homogeneous relation matrix. The cached basis is a reduced
 * Groebner basis over S of the relation columns together with the
 * defining-ideal multiples, i.e. the full preimage of the relation
 * submodule; normal form against it decides zero in the module. */
class ModulePresentation {
public:
    ModulePresentation(CtxPtr ctx, int ambient_rank, std::vector<int> ambient_shifts,
                       PolyMatrix relations);

    static ModulePresentation free_module(const CtxPtr& ctx, int rank,
                                          std::vector<int> shifts = {});
    static ModulePresentation cyclic(const CtxPtr& ctx, const std::vector<Polynomial>& relations);
    static ModulePresentation zero_module(const CtxPtr& ctx);
    static ModulePresentation residue_field(const CtxPtr& ctx);  // R/(all variables)

    const CtxPtr& ctx() const { return ctx_; }
    int ambient_rank() const { return rank_; }
    const std::vector<int>& ambient_shifts() const { return shifts_; }
    const PolyMatrix& relations() const { return relations_; }
    const GroebnerBasis& relation_gb() const { return relation_gb_; }
    FreeModule ambient() const { return FreeModule{rank_, shifts_}; }

    bool element_is_zero(const ModuleElement& v) const;  // zero in the module?
    bool is_zero_module() const;

    std::string key() const { return key_; }  // content hash for memo caches

private:
    CtxPtr ctx_;
    int rank_;
    std::vector<int> shifts_;
    PolyMatrix relations_;
    GroebnerBasis relation_gb_;
    std::string key_;
};

/* Result of splitting all unit-constant pivots out of a presentation. The
 * kept generators are a subset of the original ambient basis;
 * `expr` writes each original generator as a combination of the kept ones
 * (kept_rank x original_rank, valid modulo the relations). */
struct MinimalizedPresentation {
    ModulePresentation pres;
    std::vector<int> kept;
    PolyMatrix expr;
};

MinimalizedPresentation minimalize_presentation(const ModulePresentation& M);

/* Greedy extraction of a minimal homogeneous generating set over the ring
 * of ctx, processing candidates by ascending degree; a candidate already in
 * the span of the kept ones is dropped. Graded Nakayama makes the result a
 * minimal generating set of the submodule the candidates generate. */
std::vector<ModuleElement> minimal_generators(std::vector<ModuleElement> candidates,
                                              const FreeModule& target,
                                              const QuotientRingCtx& ctx);

/* Kernel generators of the map coker(src) -> coker(dst) induced by the
 * ambient matrix C, given as elements of src's ambient. */
std::vector<ModuleElement> induced_map_kernel(const PolyMatrix& C, const ModulePresentation& src,
                                              const ModulePresentation& dst);
bool induced_map_is_injective(const PolyMatrix& C, const ModulePresentation& src,
                              const ModulePresentation& dst);
bool induced_map_is_surjective(const PolyMatrix& C, const ModulePresentation& src,
                               const ModulePresentation& dst);
bool induced_map_is_isomorphism(const PolyMatrix& C, const ModulePresentation& src,
                                const ModulePresentation& dst);

}  // namespace homcalc

#endif
