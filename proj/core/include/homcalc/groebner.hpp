#ifndef HOMCALC_GROEBNER_HPP
#define HOMCALC_GROEBNER_HPP

#include <atomic>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homcalc/matrix.hpp"
#include "homcalc/poly.hpp"
#include "homcalc/text.hpp"

namespace homcalc {

/* A free module S^rank with a degree shift per basis vector. The degree of
 * a term m*e_c is deg(m) + shifts[c]. */
struct FreeModule {
    int rank = 0;
    std::vector<int> shifts;  // size == rank

    static FreeModule with_rank(int r) { return FreeModule{r, std::vector<int>(r, 0)}; }
};

struct ModuleTerm {
    int comp;
    Monomial mon;
    std::uint32_t coeff;
};

/* Position-over-term order with earlier components greater: a term in a
 * lower component index beats any term in a higher one; within a component
 * grevlex decides. */
Cmp module_term_cmp(const ModuleTerm& a, const ModuleTerm& b);

/* Element of a free module S^rank, terms sorted strictly descending. */
class ModuleElement {
public:
    ModuleElement(PrimeField field, int nvars, int rank)
        : field_(field), nvars_(nvars), rank_(rank) {}
    static ModuleElement from_terms(PrimeField field, int nvars, int rank,
                                    std::vector<ModuleTerm> terms);
    static ModuleElement basis_vector(PrimeField field, int nvars, int rank, int comp);
    static ModuleElement from_column(const std::vector<Polynomial>& col, PrimeField field,
                                     int nvars);

    const std::vector<ModuleTerm>& terms() const { return terms_; }
    int rank() const { return rank_; }
    int nvars() const { return nvars_; }
    const PrimeField& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const ModuleTerm& lead() const { return terms_.front(); }

    // Degree of a homogeneous element; throws for inhomogeneous ones.
    int degree(const FreeModule& fm) const;
    bool is_homogeneous(const FreeModule& fm) const;

    ModuleElement add(const ModuleElement& o) const;
    ModuleElement sub(const ModuleElement& o) const;
    ModuleElement negate() const;
    ModuleElement scale(std::uint32_t c) const;
    ModuleElement mul_term(const Monomial& m, std::uint32_t c) const;
    ModuleElement mul_poly(const Polynomial& p) const;
    ModuleElement monic() const;

    Polynomial component(int c) const;
    std::vector<Polynomial> to_column() const;
    // Keep components [from, from+count) re-indexed to start at 0.
    ModuleElement slice(int from, int count) const;

    bool operator==(const ModuleElement& o) const;
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }
    // Deterministic total order for sorting generator lists.
    static bool element_less(const ModuleElement& a, const ModuleElement& b);

private:
    PrimeField field_;
    int nvars_;
    int rank_;
    std::vector<ModuleTerm> terms_;
};

struct GroebnerBasis {
    int ambient_rank = 0;
    std::vector<ModuleElement> gens;  // reduced, monic, sorted by lead term descending
};

/* Incremental Buchberger driver. Generators must be homogeneous with
 * respect to the free module's shifts; pairs are processed lowest degree
 * first, ties broken by the lcm's lead-term order, so runs are
 * reproducible. */
class GroebnerBuilder {
public:
    GroebnerBuilder(PrimeField field, int nvars, FreeModule fm);

    void add_generator(const ModuleElement& g);  // queues pairs; call complete()
    void complete();
    ModuleElement normal_form(const ModuleElement& v) const;
    const std::vector<ModuleElement>& basis() const { return basis_; }
    GroebnerBasis reduced() const;
    const FreeModule& free_module() const { return fm_; }

private:
    struct Pair {
        int degree;
        int comp;
        Monomial lcm;
        int i, j;
    };
    struct PairLess {
        bool operator()(const Pair& a, const Pair& b) const;
    };

    PrimeField field_;
    int nvars_;
    FreeModule fm_;
    std::vector<ModuleElement> basis_;
    std::multiset<Pair, PairLess> pairs_;

    void insert(const ModuleElement& g);
};

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, PrimeField field, int nvars,
                         const FreeModule& fm);
ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

/* Counters for the --stats surface and the cache-correctness check. */
struct GroebnerStats {
    static std::atomic<std::uint64_t>& completions();
    static std::uint64_t count() { return completions().load(); }
};

/* A graded quotient ring R = S/I presented by a reduced Groebner basis of
 * its homogeneous defining ideal. */
class QuotientRingCtx {
public:
    static std::shared_ptr<const QuotientRingCtx> polynomial_ring(Ring ring);
    static std::shared_ptr<const QuotientRingCtx> quotient(
        const std::shared_ptr<const QuotientRingCtx>& base, const Polynomial& extra);

    const Ring& ring() const { return ring_; }
    const PrimeField& field() const { return ring_.field; }
    int nvars() const { return ring_.nvars(); }
    const std::vector<Polynomial>& ideal_gens() const { return ideal_gens_; }
    const GroebnerBasis& ideal_gb() const { return ideal_gb_; }
    bool is_polynomial_ring() const { return ideal_gens_.empty(); }

    Polynomial reduce(const Polynomial& p) const;
    ModuleElement reduce(const ModuleElement& v) const;
    PolyMatrix reduce(const PolyMatrix& m) const;

    std::string key() const { return key_; }  // content hash key for caches

    bool same_ring(const QuotientRingCtx& o) const { return key_ == o.key_; }

private:
    QuotientRingCtx(Ring ring, std::vector<Polynomial> gens);
    Ring ring_;
    std::vector<Polynomial> ideal_gens_;
    GroebnerBasis ideal_gb_;
    std::string key_;
};

using CtxPtr = std::shared_ptr<const QuotientRingCtx>;

/* Q together with a certified non-zerodivisor x and R = Q/(x). */
struct HypersurfaceTower {
    CtxPtr Q;
    Polynomial x;
    CtxPtr R;
};

HypersurfaceTower make_tower(const CtxPtr& Q, const Polynomial& x);

/* (I : x) = I test via the ideal quotient; I is the defining ideal. */
bool nonzerodivisor_check(const Polynomial& x, const QuotientRingCtx& ctx);
std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& ideal, const Polynomial& x,
                                       PrimeField field, int nvars);

/* Generators of { u in R^k : sum_j u_j * tracked[j] lies in the span of
 * aux over R }, R the ring of ctx, k = tracked.size(). Defining-ideal
 * multiples are adjoined internally; entries of the result are reduced to
 * canonical form mod the defining basis. */
std::vector<ModuleElement> relative_syzygies(const std::vector<ModuleElement>& tracked,
                                             const std::vector<ModuleElement>& aux,
                                             const FreeModule& target, const QuotientRingCtx& ctx);

/* Generating set of ker(A : R^cols -> R^rows) for a homogeneous matrix. */
std::vector<ModuleElement> kernel(const PolyMatrix& A, const std::vector<int>& target_shifts,
                                  const QuotientRingCtx& ctx);

/* Solve A*w = v over the ring of ctx; throws NotInImageError when v is not
 * in the column span. The division lift is canonical given the order. */
std::vector<Polynomial> lift_through(const PolyMatrix& A, const std::vector<int>& target_shifts,
                                     const std::vector<Polynomial>& v, const QuotientRingCtx& ctx);

/* Columns of A as module elements; helpers shared across modules. */
std::vector<ModuleElement> matrix_columns(const PolyMatrix& A);
PolyMatrix elements_to_matrix(const std::vector<ModuleElement>& elems, int rank,
                              PrimeField field, int nvars);
std::vector<ModuleElement> ideal_multiples(const QuotientRingCtx& ctx, int rank);

}  // namespace homcalc

#endif
