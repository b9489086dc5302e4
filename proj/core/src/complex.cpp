#include "homcalc/complex.hpp"

#include "homcalc/errors.hpp"

namespace homcalc {

bool complex_squares_to_zero(const FreeComplex& c, const QuotientRingCtx& ctx) {
    for (int i = c.lo + 2; i <= c.hi; ++i) {
        PolyMatrix prod = c.map_at(i - 1).compose(c.map_at(i));
        if (!ctx.reduce(prod).is_zero()) return false;
    }
    return true;
}

bool complex_is_minimal(const FreeComplex& c) {
    for (int i = c.lo + 1; i <= c.hi; ++i) {
        const PolyMatrix& m = c.map_at(i);
        for (int r = 0; r < m.rows(); ++r)
            for (int j = 0; j < m.cols(); ++j) {
                const Polynomial& e = m.at(r, j);
                if (!e.is_zero() && e.terms().back().mon.is_one()) return false;
            }
    }
    return true;
}

bool homology_zero_at(const FreeComplex& c, int i, const QuotientRingCtx& ctx) {
    if (!(i > c.lo && i < c.hi)) throw DimensionError("homology index outside certified range");
    std::vector<ModuleElement> cycles;
    if (c.rank_at(i - 1) == 0) {
        for (int k = 0; k < c.rank_at(i); ++k)
            cycles.push_back(ModuleElement::basis_vector(ctx.field(), ctx.nvars(), c.rank_at(i), k));
    } else {
        cycles = kernel(c.map_at(i), c.shifts_at(i - 1), ctx);
    }
    if (cycles.empty()) return true;
    GroebnerBuilder b(ctx.field(), ctx.nvars(), c.module_at(i));
    for (const auto& g : matrix_columns(c.map_at(i + 1))) b.add_generator(ctx.reduce(g));
    for (const auto& m : ideal_multiples(ctx, c.rank_at(i))) b.add_generator(m);
    b.complete();
    for (const auto& z : cycles)
        if (!b.normal_form(z).is_zero()) return false;
    return true;
}

namespace {

// Find a unit-constant entry of d_i; returns {row, col} or {-1, -1}.
std::pair<int, int> find_unit(const PolyMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(r, j).is_unit_constant()) return {r, j};
    return {-1, -1};
}

PolyMatrix drop_row(const PolyMatrix& m, int row) {
    PolyMatrix out(m.field(), m.nvars(), m.rows() - 1, m.cols());
    int ii = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (int j = 0; j < m.cols(); ++j) out.set(ii, j, m.at(i, j));
        ++ii;
    }
    return out;
}

PolyMatrix drop_col(const PolyMatrix& m, int col) {
    PolyMatrix out(m.field(), m.nvars(), m.rows(), m.cols() - 1);
    for (int i = 0; i < m.rows(); ++i) {
        int jj = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            out.set(i, jj, m.at(i, j));
            ++jj;
        }
    }
    return out;
}

}  // namespace

void minimalize_window(FreeComplex& c, const QuotientRingCtx& ctx) {
    const PrimeField F = ctx.field();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = c.lo + 1; i <= c.hi && !changed; ++i) {
            PolyMatrix& d = c.maps[std::size_t(i - c.lo)];
            auto [pr, pc] = find_unit(d);
            if (pr < 0) continue;
            changed = true;
            std::uint32_t uinv = F.inv(d.at(pr, pc).lead().coeff);

            // pivot-eliminate within d_i
            PolyMatrix nd(F, d.nvars(), d.rows() - 1, d.cols() - 1);
            {
                int ii = 0;
                for (int r = 0; r < d.rows(); ++r) {
                    if (r == pr) continue;
                    int jj = 0;
                    for (int j = 0; j < d.cols(); ++j) {
                        if (j == pc) continue;
                        Polynomial e = d.at(r, j).sub(
                            d.at(r, pc).mul(d.at(pr, j)).scale(uinv));
                        nd.set(ii, jj, ctx.reduce(e));
                        ++jj;
                    }
                    ++ii;
                }
            }

            // incoming map d_{i+1}: fold the split coordinate into row pc, then drop it
            if (c.has_map(i + 1)) {
                PolyMatrix& up = c.maps[std::size_t(i + 1 - c.lo)];
                PolyMatrix adj = up;
                for (int m = 0; m < up.cols(); ++m) {
                    Polynomial acc = up.at(pc, m);
                    for (int j = 0; j < d.cols(); ++j) {
                        if (j == pc) continue;
                        acc = acc.add(d.at(pr, j).mul(up.at(j, m)).scale(uinv));
                    }
                    adj.set(pc, m, ctx.reduce(acc));
                    if (!ctx.reduce(acc).is_zero())
                        throw Error("minimalize_window: split coordinate not a boundary");
                }
                c.maps[std::size_t(i + 1 - c.lo)] = drop_row(adj, pc);
            }

            // outgoing map d_{i-1}: the split target basis vector maps to zero
            if (c.has_map(i - 1)) {
                PolyMatrix& down = c.maps[std::size_t(i - 1 - c.lo)];
                c.maps[std::size_t(i - 1 - c.lo)] = drop_col(down, pr);
            }

            c.maps[std::size_t(i - c.lo)] = std::move(nd);
            c.ranks[std::size_t(i - c.lo)] -= 1;
            c.ranks[std::size_t(i - 1 - c.lo)] -= 1;
            c.shifts[std::size_t(i - c.lo)].erase(
                c.shifts[std::size_t(i - c.lo)].begin() + pc);
            c.shifts[std::size_t(i - 1 - c.lo)].erase(
                c.shifts[std::size_t(i - 1 - c.lo)].begin() + pr);
        }
    }
}

}  // namespace homcalc
