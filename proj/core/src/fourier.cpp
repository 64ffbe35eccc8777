#include "quasimix/fourier.hpp"

#include <cmath>

#include "quasimix/error.hpp"

namespace quasimix {

namespace {

void check_length(const GroupFunction& f, const SdpGroup& g, const char* who) {
    if (static_cast<int>(f.size()) != g.size())
        throw parameter_error(std::string(who) + ": function length " + std::to_string(f.size()) +
                              " does not match group order " + std::to_string(g.size()));
}

} // namespace

GroupFunction indicator(const GroupSubset& x) {
    GroupFunction f(static_cast<size_t>(x.group().size()), 0.0);
    for (int i : x.indices()) f[static_cast<size_t>(i)] = 1.0;
    return f;
}

FourierCoefficients::FourierCoefficients(const IrrepCensus& census) : census_(&census) {
    coef_.reserve(census.irreps().size());
    for (const Irrep& rho : census.irreps()) coef_.emplace_back(rho.degree(), rho.degree());
}

FourierCoefficients fourier_transform(const IrrepCensus& census, const GroupFunction& f) {
    const SdpGroup& g = census.group().group();
    check_length(f, g, "fourier_transform");
    FourierCoefficients out(census);
    const double scale = 1.0 / g.size();
    for (int i = 0; i < out.count(); ++i) {
        const Irrep& rho = census.irreps()[i];
        ComplexMatrix& acc = out.at(i);
        for (int x = 0; x < g.size(); ++x) {
            const cplx v = f[static_cast<size_t>(x)];
            if (v == cplx{}) continue;
            rho.accumulate_scaled(x, v, acc);
        }
        acc *= scale;
    }
    return out;
}

GroupFunction fourier_invert(const FourierCoefficients& coeffs) {
    const IrrepCensus& census = coeffs.census();
    const SdpGroup& g = census.group().group();
    if (coeffs.count() != static_cast<int>(census.irreps().size()))
        throw parameter_error("fourier_invert: coefficient count does not match the census");
    for (int i = 0; i < coeffs.count(); ++i) {
        const int d = census.irreps()[i].degree();
        if (coeffs.at(i).rows() != d || coeffs.at(i).cols() != d)
            throw parameter_error("fourier_invert: missing or misshapen coefficient for irrep " +
                                  census.irreps()[i].label().to_string());
    }
    GroupFunction f(static_cast<size_t>(g.size()), 0.0);
    for (int x = 0; x < g.size(); ++x) {
        cplx v = 0;
        for (int i = 0; i < coeffs.count(); ++i) {
            const Irrep& rho = census.irreps()[i];
            v += static_cast<double>(rho.degree()) * rho.hs_against(x, coeffs.at(i));
        }
        f[static_cast<size_t>(x)] = v;
    }
    return f;
}

GroupFunction convolve_direct(const SdpGroup& g, const GroupFunction& f1, const GroupFunction& f2) {
    check_length(f1, g, "convolve_direct");
    check_length(f2, g, "convolve_direct");
    GroupFunction out(static_cast<size_t>(g.size()), 0.0);
    const double scale = 1.0 / g.size();
    for (int y = 0; y < g.size(); ++y) {
        const cplx fy = f2[static_cast<size_t>(y)];
        if (fy == cplx{}) continue;
        const int yi = g.inv(y);
        for (int x = 0; x < g.size(); ++x)
            out[static_cast<size_t>(x)] += f1[static_cast<size_t>(g.mul(x, yi))] * fy;
    }
    for (cplx& v : out) v *= scale;
    return out;
}

GroupFunction convolve_spectral(const IrrepCensus& census, const GroupFunction& f1,
                                const GroupFunction& f2) {
    FourierCoefficients c1 = fourier_transform(census, f1);
    FourierCoefficients c2 = fourier_transform(census, f2);
    FourierCoefficients prod(census);
    for (int i = 0; i < prod.count(); ++i) prod.at(i) = c1.at(i) * c2.at(i);
    return fourier_invert(prod);
}

double lp_norm(const GroupFunction& f, double p) {
    if (p < 1.0) throw parameter_error("lp_norm requires p >= 1");
    double s = 0;
    for (const cplx& v : f) s += std::pow(std::abs(v), p);
    s /= static_cast<double>(f.size());
    return std::pow(s, 1.0 / p);
}

cplx inner(const GroupFunction& f, const GroupFunction& g) {
    if (f.size() != g.size()) throw parameter_error("inner: length mismatch");
    cplx s = 0;
    for (size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s / static_cast<double>(f.size());
}

cplx parseval_sum(const FourierCoefficients& f1, const FourierCoefficients& f2) {
    if (&f1.census() != &f2.census())
        throw parameter_error("parseval_sum: coefficients from different censuses");
    cplx s = 0;
    for (int i = 0; i < f1.count(); ++i) {
        const int d = f1.census().irreps()[i].degree();
        s += static_cast<double>(d) * ComplexMatrix::hs_inner(f1.at(i), f2.at(i));
    }
    return s;
}

} // namespace quasimix
