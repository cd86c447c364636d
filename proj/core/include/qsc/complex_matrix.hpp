#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qsc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diag(const std::vector<double>& entries);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);

// Tr(a^+ a) = sum_ij |a_ij|^2.  Equals 1 exactly for pure density matrices.
double hs_norm_sq(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Operator-norm proxy: max over columns of the column absolute sum.  Cheap,
// and an upper bound on the spectral norm; used as the stopping-rule gauge
// for matrix series.
double col_sum_norm(const ComplexMatrix& a);

// max_ij |a_ij - conj(a_ji)| <= tol
bool is_hermitian(const ComplexMatrix& a, double tol);

// a^n for n >= 0 by repeated squaring; n = 0 gives the identity.
ComplexMatrix matrix_power(const ComplexMatrix& a, unsigned long n);

} // namespace qsc
