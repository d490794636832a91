#pragma once

#include <string>

#include "plcwt/grid.hpp"
#include "plcwt/lct.hpp"

namespace plcwt {

enum class WaveletKind { Morlet2D };

/// Mother-wavelet descriptor. The Morlet carrier defaults along +x with
/// |k0| large enough that the omitted zero-mean correction is below 4e-6
/// of the peak.
struct WaveletSpec {
    WaveletKind kind = WaveletKind::Morlet2D;
    Vec2 k0{6.0, 0.0};
    double sigma = 1.0;

    void validate() const;
};

/// psi(t) = exp(j k0.t) exp(-|t|^2 / (2 sigma^2)).
Complex mother_eval(const WaveletSpec& w, Vec2 t);

/// Daughter value (1/a) psi(R_{-theta}(t - b) / a) at a single point.
Complex daughter_eval(const WaveletSpec& w, Vec2 b, double a, double theta, Vec2 t);

/// Samples the daughter wavelet on g by analytic evaluation.
ComplexField2D daughter_kernel(const WaveletSpec& w, const GridSpec& g, Vec2 b,
                               double a, double theta);

/// Daughter with the chirp factor exp(-j(A/2B)(|t|^2 - |b|^2)) attached;
/// sample moduli match daughter_kernel's exactly.
ComplexField2D lc_daughter_kernel(const WaveletSpec& w, const GridSpec& g, Vec2 b,
                                  double a, double theta, const LctParams& m);

/// Closed-form transform of the chirp-cancelled mother: the input chirp of
/// the kernel annihilates exp(-j(A/2B)|t|^2), leaving a plain Gaussian
/// Fourier integral, so
///   L^M{e^{-j(A/2B)|.|^2} psi}(xi)
///     = (sigma^2/B) e^{j(D/2B)|xi|^2} e^{-sigma^2 |xi/B - k0|^2 / 2}.
Complex chirped_mother_lct(const WaveletSpec& w, const LctParams& m, Vec2 xi);

struct ScaleQuadrature {
    double a_min = 1e-2;
    double a_max = 1e3;
    int n_scales = 256;
    int n_angles = 64;
    double target_rel_error = 5e-3;
    int max_refinements = 6;
};

struct AdmissibilityConstant {
    double value = 0.0;
    std::string quadrature;  // descriptor of the (a, theta) grid actually used
    double relative_error_estimate = 0.0;

    void validate() const;
};

/// Numerical admissibility constant: the squared modulus of the plain-FT
/// normalized transformed mother (2 pi B times chirped_mother_lct) along
/// the rays a R_{-theta} xi_probe, integrated against da dtheta / a. This
/// is the constant that closes the reconstruction and energy identities;
/// at the Fourier matrix it reduces to the classical admissibility
/// integral. The grid is refined by doubling until the change drops below
/// the target; probe-magnitude invariance holds up to the estimate.
AdmissibilityConstant admissibility(const WaveletSpec& w, const LctParams& m,
                                    const ScaleQuadrature& aq, Vec2 xi_probe);

}  // namespace plcwt
