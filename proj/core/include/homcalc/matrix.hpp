#ifndef HOMCALC_MATRIX_HPP
#define HOMCALC_MATRIX_HPP

#include <vector>

#include "homcalc/poly.hpp"

namespace homcalc {

/* Dense row-major matrix of polynomials. Column j is the image of the j-th
 * basis vector of the source free module. */
class PolyMatrix {
public:
    PolyMatrix(PrimeField field, int nvars, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }
    int nvars() const { return nvars_; }

    const Polynomial& at(int i, int j) const { return entries_[std::size_t(i) * cols_ + j]; }
    void set(int i, int j, Polynomial p);

    static PolyMatrix identity(PrimeField field, int nvars, int n);
    PolyMatrix compose(const PolyMatrix& o) const;  // this * o
    PolyMatrix add(const PolyMatrix& o) const;
    PolyMatrix sub(const PolyMatrix& o) const;
    PolyMatrix scale(const Polynomial& p) const;
    PolyMatrix transpose() const;
    static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

    std::vector<Polynomial> column(int j) const;
    bool is_zero() const;

    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

private:
    PrimeField field_;
    int nvars_;
    int rows_, cols_;
    std::vector<Polynomial> entries_;
};

PolyMatrix matrix_compose(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace homcalc

#endif
