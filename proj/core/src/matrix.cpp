#include "homcalc/matrix.hpp"

#include "homcalc/errors.hpp"

namespace homcalc {

PolyMatrix::PolyMatrix(PrimeField field, int nvars, int rows, int cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    entries_.assign(std::size_t(rows) * cols, Polynomial(field, nvars));
}

void PolyMatrix::set(int i, int j, Polynomial p) {
    if (p.nvars() != nvars_ || p.field() != field_)
        throw RingMismatchError("matrix entry over a different ring");
    entries_[std::size_t(i) * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::identity(PrimeField field, int nvars, int n) {
    PolyMatrix m(field, nvars, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(field, nvars, 1));
    return m;
}

PolyMatrix PolyMatrix::compose(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix composition dimension mismatch");
    if (field_ != o.field_ || nvars_ != o.nvars_)
        throw RingMismatchError("matrix composition over different rings");
    PolyMatrix r(field_, nvars_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Polynomial acc(field_, nvars_);
            for (int k = 0; k < cols_; ++k) {
                const Polynomial& a = at(i, k);
                const Polynomial& b = o.at(k, j);
                if (!a.is_zero() && !b.is_zero()) acc = acc.add(a.mul(b));
            }
            r.set(i, j, std::move(acc));
        }
    return r;
}

PolyMatrix PolyMatrix::add(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix addition shape mismatch");
    PolyMatrix r(field_, nvars_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j).add(o.at(i, j)));
    return r;
}

PolyMatrix PolyMatrix::sub(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix subtraction shape mismatch");
    PolyMatrix r(field_, nvars_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j).sub(o.at(i, j)));
    return r;
}

PolyMatrix PolyMatrix::scale(const Polynomial& p) const {
    PolyMatrix r(field_, nvars_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j).mul(p));
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(field_, nvars_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.field_ != b.field_ || a.nvars_ != b.nvars_)
        throw RingMismatchError("kronecker product over different rings");
    PolyMatrix r(a.field_, a.nvars_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.set(i * b.rows_ + k, j * b.cols_ + l, a.at(i, j).mul(b.at(k, l)));
                }
        }
    return r;
}

std::vector<Polynomial> PolyMatrix::column(int j) const {
    std::vector<Polynomial> c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

PolyMatrix matrix_compose(const PolyMatrix& a, const PolyMatrix& b) { return a.compose(b); }

}  // namespace homcalc
