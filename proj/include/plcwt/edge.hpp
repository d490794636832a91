#pragma once

#include <cstdint>
#include <vector>

#include "plcwt/plcwt.hpp"

namespace plcwt {

enum class FusionMethod { MaxAbs, SumAbs };
enum class ThresholdMethod { Otsu, Fixed };

/// Coefficient normalization: PaperDiscrete keeps the doubled 1/a of the
/// windowed discretization (net 1/a^2); L2 keeps the single 1/a of the
/// continuous daughter.
enum class EdgeNormalization { PaperDiscrete, L2 };

struct EdgeConfig {
    double ab_ratio = 0.01;
    double scale_base = 1.5;
    int n_scales = 5;
    std::vector<double> angles = default_angles();
    int window_n = 16;
    FusionMethod fusion = FusionMethod::MaxAbs;
    ThresholdMethod threshold = ThresholdMethod::Otsu;
    double fixed_tau = 0.5;
    EdgeNormalization normalization = EdgeNormalization::PaperDiscrete;
    int rotation_sign = -1;  // -1: R_{-theta} as in the continuous kernel
    // tighter envelope than the transform default so the coarse end of the
    // ladder (base^5) stays localized on small images
    WaveletSpec wavelet{WaveletKind::Morlet2D, {6.0, 0.0}, 0.5};

    static std::vector<double> default_angles();  // k pi / 8, k = 0..7
    void validate() const;
    double chirp_rate() const { return ab_ratio / 2.0; }
    double scale(int k) const;  // base^(k+1), k = 0..n_scales-1
};

struct EdgeMap {
    RealField2D magnitude;               // fused response in [0, 1]
    std::vector<std::uint8_t> binary;    // magnitude >= threshold_value
    double threshold_value = 0.0;
    bool degenerate_histogram = false;
    EdgeConfig config;
    std::vector<RealField2D> per_channel;  // scale-major |W| stack
};

/// Literal windowed double sum of the discrete transform at one pixel:
/// (1/a) sum over the (window_n+1)^2 window of f times
/// (1/a) e^{-j r (|t|^2 - |b|^2)} psi(R(t - b)/a), with centered pixel
/// coordinates, replicate-clamped lookups, and the rotation sign and
/// normalization taken from cfg. The O(N^2)-per-pixel oracle for
/// directional_maps.
Complex discrete_window_coefficient(const RealField2D& img, int bi, int bj, double a,
                                    double theta, const EdgeConfig& cfg);

/// |W| for every pixel and (scale, angle) channel, scale-major, via the FFT
/// fast path on a replicate-padded copy of the image. For real images the
/// magnitudes agree with the windowed formula up to window clipping.
std::vector<RealField2D> directional_maps(const RealField2D& img, const EdgeConfig& cfg);

/// MaxAbs: pointwise max over per-channel max-normalized maps.
/// SumAbs: 1/a-weighted sum. Output normalized to [0, 1].
RealField2D fuse(const std::vector<RealField2D>& stack, const EdgeConfig& cfg);

struct ThresholdResult {
    std::vector<std::uint8_t> binary;
    double tau = 0.0;
    bool degenerate = false;  // constant histogram: all-false, flagged
};

/// Otsu's 256-bin between-class-variance maximizer (lowest qualifying bin
/// on ties) or a fixed cut; input values must lie in [0, 1].
ThresholdResult threshold_field(const RealField2D& mag, ThresholdMethod method,
                                double fixed_tau);

/// directional_maps -> fuse -> threshold.
EdgeMap edge_detect(const RealField2D& img, const EdgeConfig& cfg);

}  // namespace plcwt
