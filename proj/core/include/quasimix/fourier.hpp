#pragma once

#include <complex>
#include <vector>

#include "quasimix/repr.hpp"
#include "quasimix/subset.hpp"

namespace quasimix {

// A complex-valued function on the group, indexed by canonical element
// index. All norms and transforms below use the expectation normalization
// E_x = (1/|G|) sum_x.
using GroupFunction = std::vector<cplx>;

GroupFunction indicator(const GroupSubset& x);

// Coefficient block per irrep, aligned with the census order.
class FourierCoefficients {
public:
    explicit FourierCoefficients(const IrrepCensus& census);

    const IrrepCensus& census() const { return *census_; }
    int count() const { return static_cast<int>(coef_.size()); }
    ComplexMatrix& at(int i) { return coef_[i]; }
    const ComplexMatrix& at(int i) const { return coef_[i]; }

private:
    const IrrepCensus* census_;
    std::vector<ComplexMatrix> coef_;
};

// f_hat(rho) = E_x f(x) rho(x)
FourierCoefficients fourier_transform(const IrrepCensus& census, const GroupFunction& f);

// f(x) = sum_rho d_rho <f_hat(rho), rho(x)>_HS. Throws parameter_error when
// a coefficient block is missing or has the wrong shape for its irrep.
GroupFunction fourier_invert(const FourierCoefficients& coeffs);

// (f1 * f2)(x) = E_y f1(x y^-1) f2(y)
GroupFunction convolve_direct(const SdpGroup& g, const GroupFunction& f1, const GroupFunction& f2);

// Same convolution through the coefficient product f1_hat(rho) f2_hat(rho).
GroupFunction convolve_spectral(const IrrepCensus& census, const GroupFunction& f1,
                                const GroupFunction& f2);

// ||f||_p = (E_x |f(x)|^p)^{1/p}, p >= 1.
double lp_norm(const GroupFunction& f, double p);

// <f, g> = E_x f(x) conj(g(x))
cplx inner(const GroupFunction& f, const GroupFunction& g);

// sum_rho d_rho <f1_hat(rho), f2_hat(rho)>_HS; equals inner(f1, f2).
cplx parseval_sum(const FourierCoefficients& f1, const FourierCoefficients& f2);

} // namespace quasimix
