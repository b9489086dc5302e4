#include "homcalc/homotopy.hpp"

#include <algorithm>

#include "homcalc/errors.hpp"

namespace homcalc {

namespace {

ModulePresentation present_over_Q(const HypersurfaceTower& tower, const ModulePresentation& M) {
    if (!M.ctx()->same_ring(*tower.R))
        throw RingMismatchError("module is not presented over the tower's top ring");
    const CtxPtr& Q = tower.Q;
    const PolyMatrix& rel = M.relations();
    // relations over Q: the R-relations plus x times each ambient generator
    PolyMatrix out(Q->field(), Q->nvars(), M.ambient_rank(), rel.cols() + M.ambient_rank());
    for (int i = 0; i < rel.rows(); ++i)
        for (int j = 0; j < rel.cols(); ++j) out.set(i, j, rel.at(i, j));
    for (int i = 0; i < M.ambient_rank(); ++i) out.set(i, rel.cols() + i, tower.x);
    return ModulePresentation(Q, M.ambient_rank(), M.ambient_shifts(), std::move(out));
}

/* Solve d_{target} * S = RHS column by column over Q. */
PolyMatrix lift_matrix(const FreeComplex& F, int target_index, const PolyMatrix& rhs,
                       const QuotientRingCtx& Q, const char* what) {
    // target_index is the homological position the lift lands in; the map
    // used is d_{target_index} : F_{target_index} -> F_{target_index - 1}
    const PolyMatrix& d = F.map_at(target_index);
    PolyMatrix out(Q.field(), Q.nvars(), d.cols(), rhs.cols());
    for (int j = 0; j < rhs.cols(); ++j) {
        std::vector<Polynomial> v = rhs.column(j);
        std::vector<Polynomial> w;
        try {
            w = lift_through(d, F.shifts_at(target_index - 1), v, Q);
        } catch (const NotInImageError&) {
            throw LiftFailureError(std::string("homotopy lift failed: ") + what);
        }
        for (int i = 0; i < d.cols(); ++i) out.set(i, j, w[i]);
    }
    return out;
}

}  // namespace

HomotopySystem higher_homotopies(const HypersurfaceTower& tower, const ModulePresentation& M,
                                 int J, int imax) {
    if (J < 0 || imax < 1) throw DimensionError("higher_homotopies needs J >= 0, imax >= 1");
    const CtxPtr& Q = tower.Q;
    const PrimeField Fld = Q->field();
    const int nv = Q->nvars();

    ModulePresentation MQ = present_over_Q(tower, M);
    const int top = J + 2 * imax;  // resolution long enough for every stored block
    ResolutionWindow rw = minimal_resolution(MQ, top);
    const FreeComplex& F = rw.complex;

    auto zero_matrix_between = [&](int from_j, int to_j) {
        int rows = (to_j >= 0 && to_j <= F.hi) ? F.rank_at(to_j) : 0;
        int cols = (from_j >= 0 && from_j <= F.hi) ? F.rank_at(from_j) : 0;
        return PolyMatrix(Fld, nv, rows, cols);
    };

    HomotopySystem H{tower, M, MQ, rw, J, imax, {}};
    H.sigma.assign(imax, {});

    // sigma_1 solves d sigma_1 = x Id - sigma_1 d
    {
        std::vector<PolyMatrix>& s1 = H.sigma[0];
        for (int j = 0; j <= H.stored_hi(1); ++j) {
            PolyMatrix xid = PolyMatrix::identity(Fld, nv, F.rank_at(j)).scale(tower.x);
            PolyMatrix rhs = xid;
            if (j >= 1) {
                const PolyMatrix& prev = s1[j - 1];  // F_{j-1} -> F_j
                rhs = rhs.sub(prev.compose(F.map_at(j)));
            }
            rhs = Q->reduce(rhs);
            if (j + 1 > F.hi || F.rank_at(j + 1) == 0) {
                if (!rhs.is_zero())
                    throw LiftFailureError("sigma_1 right-hand side survives past the resolution");
                s1.push_back(zero_matrix_between(j, j + 1));
            } else {
                s1.push_back(lift_matrix(F, j + 1, rhs, *Q, "sigma_1"));
            }
        }
    }

    // sigma_n solves d sigma_n = -(sigma_n d + sum_{i+l=n, i,l>=1} sigma_i sigma_l)
    for (int n = 2; n <= imax; ++n) {
        std::vector<PolyMatrix>& sn = H.sigma[n - 1];
        for (int j = 0; j <= H.stored_hi(n); ++j) {
            PolyMatrix rhs(Fld, nv, (j + 2 * n - 2 <= F.hi) ? F.rank_at(j + 2 * n - 2) : 0,
                           F.rank_at(j));
            if (j >= 1) rhs = rhs.add(sn[j - 1].compose(F.map_at(j)));
            for (int i = 1; i < n; ++i) {
                int l = n - i;
                // (sigma_i)_{j + 2l - 1} . (sigma_l)_j : F_j -> F_{j+2n-2}
                const PolyMatrix& inner = H.sigma_at(l, j);
                const PolyMatrix& outer = H.sigma_at(i, j + 2 * l - 1);
                rhs = rhs.add(outer.compose(inner));
            }
            rhs = Q->reduce(rhs.scale(Polynomial::constant(Fld, nv, Fld.neg(1))));
            if (j + 2 * n - 1 > F.hi || F.rank_at(j + 2 * n - 1) == 0) {
                if (!rhs.is_zero())
                    throw LiftFailureError("sigma_n right-hand side survives past the resolution");
                sn.push_back(zero_matrix_between(j, j + 2 * n - 1));
            } else {
                sn.push_back(lift_matrix(F, j + 2 * n - 1, rhs, *Q, "sigma_n"));
            }
        }
    }

    // verify the defining identities exactly on all stored indices
    for (int j = 0; j <= H.stored_hi(1); ++j) {
        PolyMatrix lhs(Fld, nv, F.rank_at(j), F.rank_at(j));
        if (j + 1 <= F.hi) lhs = lhs.add(F.map_at(j + 1).compose(H.sigma_at(1, j)));
        if (j >= 1) lhs = lhs.add(H.sigma_at(1, j - 1).compose(F.map_at(j)));
        PolyMatrix xid = PolyMatrix::identity(Fld, nv, F.rank_at(j)).scale(tower.x);
        if (!Q->reduce(lhs.sub(xid)).is_zero())
            throw LiftFailureError("sigma_1 identity fails at index " + std::to_string(j));
    }
    for (int n = 2; n <= imax; ++n) {
        for (int j = 0; j <= H.stored_hi(n); ++j) {
            int target = j + 2 * n - 2;
            PolyMatrix acc(Fld, nv, target <= F.hi ? F.rank_at(target) : 0, F.rank_at(j));
            if (target <= F.hi) {
                if (j + 2 * n - 1 <= F.hi)
                    acc = acc.add(F.map_at(j + 2 * n - 1).compose(H.sigma_at(n, j)));
                if (j >= 1) acc = acc.add(H.sigma_at(n, j - 1).compose(F.map_at(j)));
                for (int i = 1; i < n; ++i) {
                    int l = n - i;
                    acc = acc.add(H.sigma_at(i, j + 2 * l - 1).compose(H.sigma_at(l, j)));
                }
                if (!Q->reduce(acc).is_zero())
                    throw LiftFailureError("sigma identity fails at n = " + std::to_string(n) +
                                           ", j = " + std::to_string(j));
            }
        }
    }
    return H;
}

ShamashComplex shamash_resolution(const HomotopySystem& H, int W) {
    if (W < 1) throw DimensionError("Shamash window must reach degree 1");
    if (H.J < W || H.imax < W / 2)
        throw InsufficientHomotopyData("homotopy system stores too few blocks for degree " +
                                       std::to_string(W));
    const CtxPtr& R = H.tower.R;
    const PrimeField Fld = R->field();
    const int nv = R->nvars();
    const FreeComplex& F = H.F.complex;

    ShamashComplex out;
    FreeComplex& T = out.window;
    T.lo = 0;
    T.hi = W;
    out.blocks.resize(W + 1);
    for (int n = 0; n <= W; ++n) {
        int rank = 0;
        std::vector<int> shifts;
        for (int i = 0; 2 * i <= n; ++i) {
            int j = n - 2 * i;
            int rj = j <= F.hi ? F.rank_at(j) : 0;
            out.blocks[n].push_back({i, j, rj});
            rank += rj;
            if (rj > 0) {
                const auto& s = F.shifts_at(j);
                // e_i carries internal degree i * deg(x)
                for (int v = 0; v < rj; ++v) shifts.push_back(s[v] + i * H.tower.x.degree());
            }
        }
        T.ranks.push_back(rank);
        T.shifts.push_back(std::move(shifts));
    }
    T.maps.assign(W + 1, PolyMatrix(Fld, nv, 0, 0));

    auto block_offset = [&](int n, int i) {
        int off = 0;
        for (const auto& b : out.blocks[n]) {
            if (b.i == i) return off;
            off += b.rank;
        }
        throw DimensionError("missing Shamash block");
    };

    for (int n = 1; n <= W; ++n) {
        PolyMatrix d(Fld, nv, T.ranks[n - 1], T.ranks[n]);
        for (const auto& b : out.blocks[n]) {
            if (b.rank == 0) continue;
            int src_off = block_offset(n, b.i);
            // e_i ox f  ->  sum_{l=0..i} e_{i-l} ox sigma_l(f)
            for (int l = 0; l <= b.i; ++l) {
                int ti = b.i - l;
                int tj = b.j + 2 * l - 1;
                if (l == 0) tj = b.j - 1;  // sigma_0 = differential
                if (tj < 0) continue;
                if (2 * ti + tj != n - 1) continue;
                int trank = tj <= F.hi ? F.rank_at(tj) : 0;
                if (trank == 0) continue;
                int dst_off = block_offset(n - 1, ti);
                const PolyMatrix& blockmap =
                    (l == 0) ? F.map_at(b.j) : H.sigma_at(l, b.j);
                for (int r = 0; r < trank; ++r)
                    for (int c = 0; c < b.rank; ++c)
                        d.set(dst_off + r, src_off + c, R->reduce(blockmap.at(r, c)));
            }
        }
        T.maps[n] = std::move(d);
    }

    if (!complex_squares_to_zero(T, *R))
        throw Error("Shamash differential does not square to zero");
    for (int i = 1; i < W; ++i)
        if (!homology_zero_at(T, i, *R))
            throw Error("Shamash complex has homology at degree " + std::to_string(i));

    // degree-0 homology presents M: the kept Q-generators include into the
    // original ambient basis and induce an isomorphism of cokernels
    {
        const std::vector<int>& kept = H.F.aug_kept;
        PolyMatrix inc(Fld, nv, H.M.ambient_rank(), int(kept.size()));
        for (std::size_t l = 0; l < kept.size(); ++l)
            inc.set(kept[l], int(l), Polynomial::constant(Fld, nv, 1));
        ModulePresentation deg0(R, T.ranks[0], T.shifts[0], T.maps[1]);
        if (!induced_map_is_isomorphism(inc, deg0, H.M))
            throw Error("Shamash degree-0 homology does not present M");
    }
    return out;
}

bool minimality_check(const HomotopySystem& H) {
    if (!complex_is_minimal(H.F.complex)) return false;
    for (int i = 1; i <= H.imax; ++i)
        for (int j = 0; j <= H.stored_hi(i); ++j) {
            const PolyMatrix& m = H.sigma_at(i, j);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    const Polynomial& e = m.at(r, c);
                    if (!e.is_zero() && e.terms().back().mon.is_one()) return false;
                }
        }
    return true;
}

PrerigidityReport prerigidity_degree(const HomotopySystem& H, const ModulePresentation& N,
                                     int bound) {
    if (!N.ctx()->same_ring(*H.tower.R))
        throw RingMismatchError("pre-rigidity module must live over the tower's top ring");
    PrerigidityReport rep;
    rep.bound = bound;

    // entry annihilates N iff entry * (each generator of N) is zero in N
    auto entry_kills_N = [&](const Polynomial& e, int* bad_gen) {
        for (int g = 0; g < N.ambient_rank(); ++g) {
            ModuleElement v = ModuleElement::basis_vector(N.ctx()->field(), N.ctx()->nvars(),
                                                          N.ambient_rank(), g)
                                  .mul_poly(e);
            if (!N.element_is_zero(v)) {
                if (bad_gen) *bad_gen = g;
                return false;
            }
        }
        return true;
    };

    for (int r = 0; r <= bound; ++r) {
        std::optional<PrerigidityWitness> failure;
        for (int i = 1; i <= H.imax && !failure; ++i) {
            for (int j = 0; j <= H.stored_hi(i) && !failure; ++j) {
                if (j <= r - (2 * i - 1)) continue;
                const PolyMatrix& m = H.sigma_at(i, j);
                for (int row = 0; row < m.rows() && !failure; ++row)
                    for (int col = 0; col < m.cols() && !failure; ++col) {
                        const Polynomial& e = m.at(row, col);
                        if (e.is_zero()) continue;
                        int bad = -1;
                        if (!entry_kills_N(H.tower.R->reduce(e), &bad))
                            failure = PrerigidityWitness{r, i, j, row, col, bad};
                    }
            }
        }
        if (!failure) {
            rep.degree = r;
            return rep;
        }
        rep.witnesses.push_back(*failure);
    }
    return rep;  // NotWithinBound
}

PoincareReport check_poincare(const HomotopySystem& H, const ModulePresentation& M, int t_bound) {
    if (!minimality_check(H))
        throw NotMinimalError("Poincare relation is only asserted for minimal homotopy systems");
    BettiTable r_betti = betti(M, t_bound);
    // Q-side Betti numbers come from the stored minimal Q-resolution when it
    // is long enough, else extend it
    BettiTable q_betti = betti(H.M_over_Q, t_bound);

    PoincareReport rep;
    rep.r_betti = r_betti.values;
    rep.predicted.assign(t_bound + 1, 0);
    for (int n = 0; n <= t_bound; ++n)
        for (int i = 0; n - 2 * i >= 0; ++i) rep.predicted[n] += q_betti.values[n - 2 * i];
    rep.holds = rep.r_betti == rep.predicted;
    return rep;
}

}  // namespace homcalc
