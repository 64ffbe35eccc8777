#include "quasimix/complex_matrix.hpp"

#include <cmath>

#include "quasimix/error.hpp"

namespace quasimix {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw parameter_error("matrix dimension mismatch in product");
    ComplexMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const cplx v = at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw parameter_error("matrix dimension mismatch in sum");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : a_) v *= s;
    return *this;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

cplx ComplexMatrix::hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw parameter_error("matrix dimension mismatch in HS inner product");
    cplx s = 0;
    for (size_t i = 0; i < a.a_.size(); ++i) s += a.a_[i] * std::conj(b.a_[i]);
    return s;
}

double ComplexMatrix::hs_norm() const {
    double s = 0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw parameter_error("matrix dimension mismatch in comparison");
    double m = 0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

bool ComplexMatrix::is_identity(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (std::abs(at(i, j) - (i == j ? cplx{1.0} : cplx{})) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    return ((*this) * adjoint()).is_identity(tol);
}

} // namespace quasimix
