#pragma once

#include <complex>
#include <vector>

namespace quasimix {

using cplx = std::complex<double>;

// Dense complex matrix carrying the Hilbert-Schmidt pairing
// <a, b>_HS = Tr(b* a) used by Fourier inversion and Parseval.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    cplx trace() const;
    ComplexMatrix adjoint() const;

    // <a, b>_HS = Tr(b* a) = sum_ij a_ij conj(b_ij)
    static cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
    double hs_norm() const;

    double max_abs_diff(const ComplexMatrix& other) const;
    bool is_identity(double tol) const;
    bool is_unitary(double tol) const;

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

} // namespace quasimix
