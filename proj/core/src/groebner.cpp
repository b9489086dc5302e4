#include "homcalc/groebner.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "homcalc/errors.hpp"

namespace homcalc {

Cmp module_term_cmp(const ModuleTerm& a, const ModuleTerm& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? Cmp::greater : Cmp::less;
    return grevlex_cmp(a.mon, b.mon);
}

ModuleElement ModuleElement::from_terms(PrimeField field, int nvars, int rank,
                                        std::vector<ModuleTerm> terms) {
    for (const auto& t : terms) {
        if (t.comp < 0 || t.comp >= rank) throw DimensionError("module term component out of range");
        if (t.mon.nvars() != nvars) throw DimensionError("module term variable-count mismatch");
    }
    std::sort(terms.begin(), terms.end(), [](const ModuleTerm& a, const ModuleTerm& b) {
        return module_term_cmp(a, b) == Cmp::greater;
    });
    ModuleElement v(field, nvars, rank);
    for (auto& t : terms) {
        std::uint32_t c = t.coeff % field.modulus();
        if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mon == t.mon) {
            v.terms_.back().coeff = field.add(v.terms_.back().coeff, c);
            if (v.terms_.back().coeff == 0) v.terms_.pop_back();
        } else if (c != 0) {
            v.terms_.push_back({t.comp, t.mon, c});
        }
    }
    return v;
}

ModuleElement ModuleElement::basis_vector(PrimeField field, int nvars, int rank, int comp) {
    return from_terms(field, nvars, rank, {{comp, Monomial(nvars), 1}});
}

ModuleElement ModuleElement::from_column(const std::vector<Polynomial>& col, PrimeField field,
                                         int nvars) {
    std::vector<ModuleTerm> terms;
    for (std::size_t i = 0; i < col.size(); ++i)
        for (const auto& t : col[i].terms()) terms.push_back({int(i), t.mon, t.coeff});
    return from_terms(field, nvars, int(col.size()), std::move(terms));
}

int ModuleElement::degree(const FreeModule& fm) const {
    if (!is_homogeneous(fm)) throw InhomogeneousError("degree of inhomogeneous element");
    if (terms_.empty()) throw Error("degree of the zero element");
    return terms_.front().mon.degree() + fm.shifts[terms_.front().comp];
}

bool ModuleElement::is_homogeneous(const FreeModule& fm) const {
    if (int(fm.shifts.size()) != rank_) throw DimensionError("shift vector rank mismatch");
    if (terms_.empty()) return true;
    int d = terms_.front().mon.degree() + fm.shifts[terms_.front().comp];
    for (const auto& t : terms_)
        if (t.mon.degree() + fm.shifts[t.comp] != d) return false;
    return true;
}

ModuleElement ModuleElement::add(const ModuleElement& o) const {
    if (rank_ != o.rank_) throw DimensionError("module element rank mismatch");
    if (field_ != o.field_ || nvars_ != o.nvars_)
        throw RingMismatchError("module elements over different rings");
    ModuleElement r(field_, nvars_, rank_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Cmp c = module_term_cmp(terms_[i], o.terms_[j]);
        if (c == Cmp::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == Cmp::less) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].comp, terms_[i].mon, s});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

ModuleElement ModuleElement::negate() const {
    ModuleElement r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
}

ModuleElement ModuleElement::sub(const ModuleElement& o) const { return add(o.negate()); }

ModuleElement ModuleElement::scale(std::uint32_t c) const {
    c %= field_.modulus();
    ModuleElement r(field_, nvars_, rank_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
}

ModuleElement ModuleElement::mul_term(const Monomial& m, std::uint32_t c) const {
    c %= field_.modulus();
    ModuleElement r(field_, nvars_, rank_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mon.times(m), field_.mul(t.coeff, c)});
    return r;
}

ModuleElement ModuleElement::mul_poly(const Polynomial& p) const {
    ModuleElement acc(field_, nvars_, rank_);
    for (const auto& t : p.terms()) acc = acc.add(mul_term(t.mon, t.coeff));
    return acc;
}

ModuleElement ModuleElement::monic() const {
    if (terms_.empty()) return *this;
    return scale(field_.inv(terms_.front().coeff));
}

Polynomial ModuleElement::component(int c) const {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : terms_)
        if (t.comp == c) terms.push_back({t.mon, t.coeff});
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
}

std::vector<Polynomial> ModuleElement::to_column() const {
    std::vector<Polynomial> col(rank_, Polynomial(field_, nvars_));
    for (int c = 0; c < rank_; ++c) col[c] = component(c);
    return col;
}

ModuleElement ModuleElement::slice(int from, int count) const {
    std::vector<ModuleTerm> terms;
    for (const auto& t : terms_)
        if (t.comp >= from && t.comp < from + count) terms.push_back({t.comp - from, t.mon, t.coeff});
    return from_terms(field_, nvars_, count, std::move(terms));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].comp != o.terms_[i].comp || terms_[i].coeff != o.terms_[i].coeff ||
            terms_[i].mon != o.terms_[i].mon)
            return false;
    }
    return true;
}

bool ModuleElement::element_less(const ModuleElement& a, const ModuleElement& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        Cmp c = module_term_cmp(a.terms_[i], b.terms_[i]);
        if (c != Cmp::equal) return c == Cmp::less;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.terms_.size() < b.terms_.size();
}

// ---------------------------------------------------------------------------
// Buchberger

std::atomic<std::uint64_t>& GroebnerStats::completions() {
    static std::atomic<std::uint64_t> n{0};
    return n;
}

bool GroebnerBuilder::PairLess::operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.comp != b.comp) return a.comp < b.comp;
    Cmp c = grevlex_cmp(a.lcm, b.lcm);
    if (c != Cmp::equal) return c == Cmp::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

GroebnerBuilder::GroebnerBuilder(PrimeField field, int nvars, FreeModule fm)
    : field_(field), nvars_(nvars), fm_(std::move(fm)) {}

void GroebnerBuilder::insert(const ModuleElement& g) {
    ModuleElement m = g.monic();
    int idx = int(basis_.size());
    for (int i = 0; i < idx; ++i) {
        const auto& li = basis_[i].lead();
        const auto& lg = m.lead();
        if (li.comp != lg.comp) continue;
        // the product criterion is only valid in ambient rank one
        if (fm_.rank == 1 && Monomial::coprime(li.mon, lg.mon)) continue;
        Monomial l = Monomial::lcm(li.mon, lg.mon);
        pairs_.insert({l.degree() + fm_.shifts[li.comp], li.comp, l, i, idx});
    }
    basis_.push_back(std::move(m));
}

void GroebnerBuilder::add_generator(const ModuleElement& g) {
    if (g.rank() != fm_.rank) throw DimensionError("generator rank mismatch");
    if (!g.is_homogeneous(fm_)) throw InhomogeneousError("inhomogeneous generator");
    if (g.is_zero()) return;
    ModuleElement r = normal_form(g);
    if (!r.is_zero()) insert(r);
}

ModuleElement GroebnerBuilder::normal_form(const ModuleElement& v) const {
    if (v.rank() != fm_.rank) throw DimensionError("normal form rank mismatch");
    ModuleElement h = v;
    std::vector<ModuleTerm> remainder;
    while (!h.is_zero()) {
        const ModuleTerm& t = h.lead();
        bool reduced = false;
        for (const auto& g : basis_) {
            const ModuleTerm& lg = g.lead();
            if (lg.comp == t.comp && lg.mon.divides(t.mon)) {
                Monomial q = lg.mon.divided_into(t.mon);
                h = h.sub(g.mul_term(q, t.coeff));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(t);
            h = h.sub(ModuleElement::from_terms(h.field(), h.nvars(), h.rank(), {t}));
        }
    }
    return ModuleElement::from_terms(v.field(), v.nvars(), v.rank(), std::move(remainder));
}

void GroebnerBuilder::complete() {
    GroebnerStats::completions().fetch_add(1);
    while (!pairs_.empty()) {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        const ModuleElement& f = basis_[p.i];
        const ModuleElement& g = basis_[p.j];
        Monomial mf = f.lead().mon.divided_into(p.lcm);
        Monomial mg = g.lead().mon.divided_into(p.lcm);
        ModuleElement s = f.mul_term(mf, 1).sub(g.mul_term(mg, 1));
        ModuleElement r = normal_form(s);
        if (!r.is_zero()) insert(r);
    }
}

GroebnerBasis GroebnerBuilder::reduced() const {
    // keep only elements whose leads are minimal (exactly one per repeated lead)
    std::vector<ModuleElement> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& li = basis_[i].lead();
        bool redundant = false;
        for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& lj = basis_[j].lead();
            if (lj.comp != li.comp || !lj.mon.divides(li.mon)) continue;
            redundant = (lj.mon == li.mon) ? (j < i) : true;
        }
        if (!redundant) minimal.push_back(basis_[i]);
    }
    // one tail-reduction pass gives the unique reduced basis
    std::vector<ModuleElement> work;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBuilder tmp(field_, nvars_, fm_);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) tmp.basis_.push_back(minimal[j]);
        work.push_back(tmp.normal_form(minimal[i]).monic());
    }
    std::sort(work.begin(), work.end(), [](const ModuleElement& a, const ModuleElement& b) {
        return module_term_cmp(a.lead(), b.lead()) == Cmp::greater;
    });
    return GroebnerBasis{fm_.rank, std::move(work)};
}

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, PrimeField field, int nvars,
                         const FreeModule& fm) {
    GroebnerBuilder b(field, nvars, fm);
    for (const auto& g : gens) b.add_generator(g);
    b.complete();
    return b.reduced();
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
    if (v.rank() != gb.ambient_rank) throw DimensionError("normal form ambient rank mismatch");
    ModuleElement h = v;
    std::vector<ModuleTerm> remainder;
    while (!h.is_zero()) {
        const ModuleTerm& t = h.lead();
        bool reduced = false;
        for (const auto& g : gb.gens) {
            const ModuleTerm& lg = g.lead();
            if (lg.comp == t.comp && lg.mon.divides(t.mon)) {
                Monomial q = lg.mon.divided_into(t.mon);
                std::uint32_t c = v.field().mul(t.coeff, v.field().inv(lg.coeff));
                h = h.sub(g.mul_term(q, c));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(t);
            h = h.sub(ModuleElement::from_terms(h.field(), h.nvars(), h.rank(), {t}));
        }
    }
    return ModuleElement::from_terms(v.field(), v.nvars(), v.rank(), std::move(remainder));
}

// ---------------------------------------------------------------------------
// Ring contexts

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string ring_signature(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::ostringstream out;
    out << "p=" << ring.field.modulus() << ";vars=";
    for (const auto& v : ring.vars) out << v << ",";
    out << ";ideal=";
    for (const auto& g : gens) out << polynomial_to_string(g, ring) << ";";
    return out.str();
}

}  // namespace

QuotientRingCtx::QuotientRingCtx(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), ideal_gens_(std::move(gens)),
      ideal_gb_{1, {}} {
    std::vector<ModuleElement> elems;
    for (const auto& g : ideal_gens_) {
        if (!g.is_homogeneous()) throw InhomogeneousError("defining ideal must be homogeneous");
        elems.push_back(ModuleElement::from_column({g}, ring_.field, ring_.nvars()));
    }
    ideal_gb_ = buchberger(elems, ring_.field, ring_.nvars(), FreeModule::with_rank(1));
    std::ostringstream k;
    k << std::hex << fnv1a(ring_signature(ring_, ideal_gens_));
    key_ = k.str();
}

CtxPtr QuotientRingCtx::polynomial_ring(Ring ring) {
    return CtxPtr(new QuotientRingCtx(std::move(ring), {}));
}

CtxPtr QuotientRingCtx::quotient(const CtxPtr& base, const Polynomial& extra) {
    std::vector<Polynomial> gens = base->ideal_gens_;
    gens.push_back(extra);
    return CtxPtr(new QuotientRingCtx(base->ring_, std::move(gens)));
}

Polynomial QuotientRingCtx::reduce(const Polynomial& p) const {
    if (ideal_gb_.gens.empty()) return p;
    ModuleElement v = ModuleElement::from_column({p}, ring_.field, ring_.nvars());
    return normal_form(v, ideal_gb_).component(0);
}

ModuleElement QuotientRingCtx::reduce(const ModuleElement& v) const {
    if (ideal_gb_.gens.empty()) return v;
    std::vector<ModuleTerm> terms;
    for (int c = 0; c < v.rank(); ++c) {
        Polynomial r = reduce(v.component(c));
        for (const auto& t : r.terms()) terms.push_back({c, t.mon, t.coeff});
    }
    return ModuleElement::from_terms(v.field(), v.nvars(), v.rank(), std::move(terms));
}

PolyMatrix QuotientRingCtx::reduce(const PolyMatrix& m) const {
    if (ideal_gb_.gens.empty()) return m;
    PolyMatrix r(m.field(), m.nvars(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, reduce(m.at(i, j)));
    return r;
}

// ---------------------------------------------------------------------------
// Derived operations

std::vector<ModuleElement> matrix_columns(const PolyMatrix& A) {
    std::vector<ModuleElement> cols;
    cols.reserve(A.cols());
    for (int j = 0; j < A.cols(); ++j)
        cols.push_back(ModuleElement::from_column(A.column(j), A.field(), A.nvars()));
    return cols;
}

PolyMatrix elements_to_matrix(const std::vector<ModuleElement>& elems, int rank, PrimeField field,
                              int nvars) {
    PolyMatrix m(field, nvars, rank, int(elems.size()));
    for (std::size_t j = 0; j < elems.size(); ++j) {
        std::vector<Polynomial> col = elems[j].to_column();
        for (int i = 0; i < rank; ++i) m.set(i, int(j), col[i]);
    }
    return m;
}

std::vector<ModuleElement> ideal_multiples(const QuotientRingCtx& ctx, int rank) {
    std::vector<ModuleElement> out;
    for (const auto& f : ctx.ideal_gens())
        for (int c = 0; c < rank; ++c)
            out.push_back(
                ModuleElement::basis_vector(ctx.field(), ctx.nvars(), rank, c).mul_poly(f));
    return out;
}

std::vector<ModuleElement> relative_syzygies(const std::vector<ModuleElement>& tracked,
                                             const std::vector<ModuleElement>& aux,
                                             const FreeModule& target,
                                             const QuotientRingCtx& ctx) {
    const PrimeField F = ctx.field();
    const int nv = ctx.nvars();
    const int r = target.rank;
    const int k = int(tracked.size());
    FreeModule big;
    big.rank = r + k;
    big.shifts = target.shifts;
    for (const auto& t : tracked) {
        if (t.is_zero()) throw Error("relative_syzygies: zero tracked generator");
        big.shifts.push_back(t.degree(target));
    }

    auto widen = [&](const ModuleElement& v, int extra_comp) {
        std::vector<ModuleTerm> terms(v.terms().begin(), v.terms().end());
        if (extra_comp >= 0) terms.push_back({extra_comp, Monomial(nv), 1});
        return ModuleElement::from_terms(F, nv, big.rank, std::move(terms));
    };

    GroebnerBuilder b(F, nv, big);
    for (int j = 0; j < k; ++j) b.add_generator(widen(tracked[j], r + j));
    for (const auto& a : aux) b.add_generator(widen(a, -1));
    for (const auto& f : ctx.ideal_gens())
        for (int c = 0; c < r; ++c)
            b.add_generator(widen(ModuleElement::basis_vector(F, nv, r, c).mul_poly(f), -1));
    b.complete();
    GroebnerBasis gb = b.reduced();

    std::vector<ModuleElement> result;
    for (const auto& g : gb.gens) {
        bool tracking_only = true;
        for (const auto& t : g.terms())
            if (t.comp < r) {
                tracking_only = false;
                break;
            }
        if (!tracking_only) continue;
        ModuleElement u = ctx.reduce(g.slice(r, k));
        if (!u.is_zero()) result.push_back(std::move(u));
    }
    std::sort(result.begin(), result.end(), ModuleElement::element_less);
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<ModuleElement> kernel(const PolyMatrix& A, const std::vector<int>& target_shifts,
                                  const QuotientRingCtx& ctx) {
    FreeModule target{A.rows(), target_shifts};
    if (int(target_shifts.size()) != A.rows()) throw DimensionError("kernel shift vector mismatch");
    std::vector<ModuleElement> tracked;
    std::vector<int> col_index;
    for (int j = 0; j < A.cols(); ++j) {
        ModuleElement c = ctx.reduce(ModuleElement::from_column(A.column(j), A.field(), A.nvars()));
        if (!c.is_homogeneous(target))
            throw InhomogeneousError("kernel of an inhomogeneous matrix");
        tracked.push_back(std::move(c));
        col_index.push_back(j);
    }
    // zero columns contribute basis-vector syzygies directly
    std::vector<ModuleElement> zero_syz;
    std::vector<ModuleElement> nonzero;
    std::vector<int> nonzero_index;
    for (std::size_t j = 0; j < tracked.size(); ++j) {
        if (tracked[j].is_zero())
            zero_syz.push_back(
                ModuleElement::basis_vector(A.field(), A.nvars(), A.cols(), int(col_index[j])));
        else {
            nonzero.push_back(tracked[j]);
            nonzero_index.push_back(col_index[j]);
        }
    }
    std::vector<ModuleElement> syz = relative_syzygies(nonzero, {}, target, ctx);
    std::vector<ModuleElement> out = std::move(zero_syz);
    for (const auto& s : syz) {
        // re-embed coordinates of the nonzero columns into the full column space
        std::vector<ModuleTerm> terms;
        for (const auto& t : s.terms()) terms.push_back({nonzero_index[t.comp], t.mon, t.coeff});
        out.push_back(
            ModuleElement::from_terms(A.field(), A.nvars(), A.cols(), std::move(terms)));
    }
    std::sort(out.begin(), out.end(), ModuleElement::element_less);
    return out;
}

std::vector<Polynomial> lift_through(const PolyMatrix& A, const std::vector<int>& target_shifts,
                                     const std::vector<Polynomial>& v, const QuotientRingCtx& ctx) {
    const PrimeField F = A.field();
    const int nv = A.nvars();
    const int r = A.rows();
    const int k = A.cols();
    if (int(v.size()) != r) throw DimensionError("lift_through target size mismatch");
    FreeModule target{r, target_shifts};

    FreeModule big;
    big.rank = r + k;
    big.shifts = target_shifts;
    std::vector<ModuleElement> cols = matrix_columns(A);
    for (int j = 0; j < k; ++j) {
        ModuleElement c = ctx.reduce(cols[j]);
        if (c.is_zero())
            big.shifts.push_back(0);
        else
            big.shifts.push_back(c.degree(target));
    }

    auto widen = [&](const ModuleElement& e, int extra_comp) {
        std::vector<ModuleTerm> terms(e.terms().begin(), e.terms().end());
        if (extra_comp >= 0) terms.push_back({extra_comp, Monomial(nv), 1});
        return ModuleElement::from_terms(F, nv, big.rank, std::move(terms));
    };

    GroebnerBuilder b(F, nv, big);
    for (int j = 0; j < k; ++j) {
        ModuleElement c = ctx.reduce(cols[j]);
        if (c.is_zero()) continue;  // zero column: any coefficient works, use 0
        b.add_generator(widen(c, r + j));
    }
    for (const auto& f : ctx.ideal_gens())
        for (int c = 0; c < r; ++c)
            b.add_generator(widen(ModuleElement::basis_vector(F, nv, r, c).mul_poly(f), -1));
    b.complete();

    ModuleElement target_elem = ctx.reduce(ModuleElement::from_column(v, F, nv));
    ModuleElement rem = b.normal_form(widen(target_elem, -1));
    for (const auto& t : rem.terms())
        if (t.comp < r) throw NotInImageError("element is not in the column span");
    ModuleElement w = ctx.reduce(rem.slice(r, k).negate());
    return w.to_column();
}

std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& ideal, const Polynomial& x,
                                       PrimeField field, int nvars) {
    // (I : x) from the syzygies of [x, g_1, ..., g_s] in rank one
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("v" + std::to_string(i));
    CtxPtr S = QuotientRingCtx::polynomial_ring(Ring{field, names});

    std::vector<ModuleElement> tracked;
    tracked.push_back(ModuleElement::from_column({x}, field, nvars));
    std::vector<ModuleElement> aux;
    for (const auto& g : ideal) aux.push_back(ModuleElement::from_column({g}, field, nvars));
    FreeModule target = FreeModule::with_rank(1);
    std::vector<ModuleElement> syz = relative_syzygies(tracked, aux, target, *S);
    std::vector<Polynomial> out;
    for (const auto& s : syz) {
        Polynomial h = s.component(0);
        if (!h.is_zero()) out.push_back(std::move(h));
    }
    return out;
}

bool nonzerodivisor_check(const Polynomial& x, const QuotientRingCtx& ctx) {
    if (!x.is_homogeneous()) throw InhomogeneousError("non-zerodivisor check needs homogeneous x");
    if (ctx.reduce(x).is_zero()) return false;
    std::vector<Polynomial> quot =
        ideal_quotient(ctx.ideal_gens(), x, ctx.field(), ctx.nvars());
    for (const auto& h : quot)
        if (!ctx.reduce(h).is_zero()) return false;
    return true;
}

HypersurfaceTower make_tower(const CtxPtr& Q, const Polynomial& x) {
    if (!x.is_homogeneous() || x.is_zero() || x.degree() == 0)
        throw InhomogeneousError("tower element must be homogeneous of positive degree");
    if (!nonzerodivisor_check(x, *Q))
        throw ZerodivisorError("tower element is a zerodivisor modulo the base ideal");
    return HypersurfaceTower{Q, x, QuotientRingCtx::quotient(Q, x)};
}

}  // namespace homcalc
