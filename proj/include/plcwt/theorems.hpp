#pragma once

#include <string>
#include <vector>

#include "plcwt/plcwt.hpp"

namespace plcwt {

/// h(x) = integral f(t) g(x - t) dt with a factor-2 zero-pad guard band.
ComplexField2D convolve_full(const ComplexField2D& f, const ComplexField2D& g);

/// h(x) = integral f(t) g(x + t) dt (no conjugation), same guard band.
ComplexField2D correlate_full(const ComplexField2D& f, const ComplexField2D& g);

/// Plane-wise convolution over b at each fixed (a, theta). Planes are
/// convolved cyclically on their own (possibly guard-padded) grid.
CoefficientVolume convolve_in_b(const CoefficientVolume& v1, const CoefficientVolume& v2);
CoefficientVolume correlate_in_b(const CoefficientVolume& v1, const CoefficientVolume& v2);

/// Convolution of two sampled wavelets with the rotation decoration
/// psi_h(t) = integral psi_f(R_{-theta} y) psi_g(R_{-theta}(R_theta t - y)) dy.
/// Substituting z = R_{-theta} y collapses this to the plain convolution for
/// every theta; the theta argument is kept for the signature's sake and the
/// collapse is itself oracle-tested.
ComplexField2D wavelet_convolve(const ComplexField2D& wf, const ComplexField2D& wg,
                                double theta);
ComplexField2D wavelet_correlate(const ComplexField2D& wf, const ComplexField2D& wg,
                                 double theta);

struct TheoremReport {
    double max_rel_error = 0.0;
    std::vector<double> plane_errors;
    std::string config;
};

/// Convolution theorem check: the transform of a convolved signal, analyzed
/// with the convolved wavelet, against the plane-wise convolution of the two
/// transforms. The signal- and plane-domain convolutions carry the same
/// chirp factors the transform itself applies (the composition under which
/// the spectral factorization is exact); at M = Fourier every chirp is 1 and
/// both reduce to the plain operators.
TheoremReport verify_convolution_theorem(const ComplexField2D& f, const ComplexField2D& g,
                                         const WaveletSpec& wf, const WaveletSpec& wg,
                                         const LctParams& m, const ScaleAngleGrid& grid);

/// Correlation twin; the identity holds at +b (the reflected-argument
/// variant fails for asymmetric pairs and is exercised in tests only).
TheoremReport verify_correlation_theorem(const ComplexField2D& f, const ComplexField2D& g,
                                         const WaveletSpec& wf, const WaveletSpec& wg,
                                         const LctParams& m, const ScaleAngleGrid& grid);

struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // >= 1 iff lhs >= rhs, also when rhs < 0
    bool satisfied = false;
    std::string config;
    double epsilon_quad = 0.01;
    std::vector<double> rhs_per_scale;  // generalized inequality only
};

/// mu = digamma(1/2) - ln pi, the additive constant of the logarithmic
/// inequality's bound.
double log_uncertainty_mu();

/// Position-spread of the coefficients times frequency-spread of the
/// transformed signal against (B/2) sqrt(C) ||f||^2.
InequalityReport heisenberg(const ComplexField2D& f, const WaveletSpec& w,
                            const LctParams& m, const ScaleAngleGrid& grid,
                            double epsilon_quad = 0.01);

/// p-th moment version, p in [1, 2]. The bound's free scale symbol is bound
/// to each grid scale; the report carries every per-scale value and compares
/// against their minimum.
InequalityReport generalized_heisenberg(const ComplexField2D& f, const WaveletSpec& w,
                                        const LctParams& m, const ScaleAngleGrid& grid,
                                        double p, double epsilon_quad = 0.01);

/// Logarithmic moments against (mu + ln B) C ||f||^2; origin samples of the
/// b and xi lattices are masked. Both sides may be negative.
InequalityReport logarithmic_uncertainty(const ComplexField2D& f, const WaveletSpec& w,
                                         const LctParams& m, const ScaleAngleGrid& grid,
                                         double epsilon_quad = 0.01);

}  // namespace plcwt
