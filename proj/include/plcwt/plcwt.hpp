#pragma once

#include <vector>

#include "plcwt/grid.hpp"
#include "plcwt/lct.hpp"
#include "plcwt/wavelet.hpp"

namespace plcwt {

/// Sampled (a, theta) lattice with quadrature weights realizing the
/// invariant measure da dtheta / a^3. weights_a folds the a^-2 Jacobian
/// into a log-a trapezoid rule; weights_theta is uniform and sums to 2 pi.
struct ScaleAngleGrid {
    std::vector<double> scales;
    std::vector<double> angles;
    std::vector<double> weights_a;
    std::vector<double> weights_theta;

    void validate() const;
    std::size_t plane_count() const { return scales.size() * angles.size(); }
    std::size_t plane_index(std::size_t si, std::size_t ai) const {
        return si * angles.size() + ai;
    }
};

/// Log-spaced scales in [a_min, a_max], uniform angles over [0, 2 pi).
ScaleAngleGrid log_scale_grid(double a_min, double a_max, int n_scales, int n_angles);

/// Geometric ladder base^k, k = 1..n_scales, with n_angles uniform angles
/// over [0, pi) as used by the edge pipeline.
ScaleAngleGrid edge_scale_grid(double base, int n_scales, int n_angles);

/// Transform output: one b-plane per (scale, angle) cell. `spatial` is the
/// signal grid; planes may live on a larger guard-padded grid when the
/// transform was run uncropped.
struct CoefficientVolume {
    ScaleAngleGrid grid;
    GridSpec spatial;
    std::vector<ComplexField2D> planes;
    LctParams params;
    WaveletSpec wavelet;

    void validate() const;
    ComplexField2D& plane(std::size_t si, std::size_t ai) {
        return planes[grid.plane_index(si, ai)];
    }
    const ComplexField2D& plane(std::size_t si, std::size_t ai) const {
        return planes[grid.plane_index(si, ai)];
    }
};

struct TransformOptions {
    int pad_factor = 2;  // zero-pad guard band against cyclic wrap-around
    bool crop = true;    // crop planes back to the signal grid
};

/// Single-coefficient Riemann sum of the defining inner product; the
/// O(N^2)-per-point oracle against which the fast path is tested.
Complex plcwt_direct(const ComplexField2D& f, const WaveletSpec& w, const LctParams& m,
                     Vec2 b, double a, double theta);

/// Fast path: input chirp, FFT cross-correlation with the daughter kernel
/// for all b at once, output chirp. Planes at distinct (a, theta) are
/// computed concurrently.
CoefficientVolume plcwt_forward(const ComplexField2D& f, const WaveletSpec& w,
                                const LctParams& m, const ScaleAngleGrid& g,
                                const TransformOptions& opt = {});

/// The Fourier-parameter special case, kept as a named baseline entry point.
CoefficientVolume pwt_forward(const ComplexField2D& f, const WaveletSpec& w,
                              const ScaleAngleGrid& g, const TransformOptions& opt = {});

/// Reconstruction: (1/C) sum of W(b,a,theta) times the transform kernel
/// over the full (b, a, theta) lattice with measure db da dtheta / a^3.
ComplexField2D plcwt_inverse(const CoefficientVolume& v, const AdmissibilityConstant& c);

/// Triple sum of |W|^2 against the invariant measure.
double energy(const CoefficientVolume& v);

/// Triple sum of W_f conj(W_g) against the invariant measure.
Complex orthogonality_inner(const CoefficientVolume& v1, const CoefficientVolume& v2);

/// Computes one plane through the spectral side: the transform of the
/// plane factorizes into the transformed signal times the conjugated
/// spectrum of the scaled rotated kernel; returns the inverse transform of
/// that product. Cross-check path for the step-wise pipeline.
ComplexField2D spectral_factorization(const ComplexField2D& f, const WaveletSpec& w,
                                      const LctParams& m, double a, double theta,
                                      const TransformOptions& opt = {});

/// Per-plane b-energy over signal energy. The fixed-(a,theta) Parseval
/// claim does not hold for generic wavelets; exposed as numbers only,
/// never asserted.
struct ParsevalDiagnostic {
    std::vector<double> plane_energy;
    double signal_energy = 0.0;
    std::vector<double> ratio;
};
ParsevalDiagnostic parseval_diagnostic(const CoefficientVolume& v,
                                       const ComplexField2D& f);

}  // namespace plcwt
