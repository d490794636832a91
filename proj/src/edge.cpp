#include "plcwt/edge.hpp"

#include <algorithm>
#include <cmath>

namespace plcwt {

std::vector<double> EdgeConfig::default_angles() {
    std::vector<double> a;
    for (int k = 0; k < 8; ++k) a.push_back(kPi * k / 8.0);
    return a;
}

void EdgeConfig::validate() const {
    if (!(ab_ratio >= 0.0 && ab_ratio <= 0.2))
        throw ConfigError("EdgeConfig: ab_ratio must lie in [0, 0.2]");
    if (!(scale_base > 1.0)) throw ConfigError("EdgeConfig: scale_base must exceed 1");
    if (n_scales < 1) throw ConfigError("EdgeConfig: n_scales must be >= 1");
    if (angles.empty()) throw ConfigError("EdgeConfig: angle list is empty");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] >= 0.0 && angles[i] < kPi))
            throw ConfigError("EdgeConfig: angles must lie in [0, pi)");
        if (i > 0 && !(angles[i] > angles[i - 1]))
            throw ConfigError("EdgeConfig: angles must be strictly increasing");
    }
    if (window_n < 4 || window_n % 2 != 0)
        throw ConfigError("EdgeConfig: window_n must be even and >= 4");
    if (!(fixed_tau >= 0.0 && fixed_tau <= 1.0))
        throw ConfigError("EdgeConfig: fixed_tau must lie in [0, 1]");
    if (rotation_sign != -1 && rotation_sign != 1)
        throw ConfigError("EdgeConfig: rotation_sign must be -1 or +1");
    wavelet.validate();
}

double EdgeConfig::scale(int k) const { return std::pow(scale_base, k + 1); }

Complex discrete_window_coefficient(const RealField2D& img, int bi, int bj, double a,
                                    double theta, const EdgeConfig& cfg) {
    cfg.validate();
    if (!(a > 0.0)) throw ScaleError("discrete_window_coefficient: scale must be positive");
    const GridSpec& g = img.spec;
    const double r = cfg.chirp_rate();
    const double rot = cfg.rotation_sign * theta;
    const Vec2 tb = g.coord(bi, bj);
    const int half = cfg.window_n / 2;
    Complex acc{0.0, 0.0};
    for (int dx = -half; dx <= half; ++dx) {
        const int ci = std::clamp(bi + dx, 0, g.n1 - 1);
        for (int dy = -half; dy <= half; ++dy) {
            const int cj = std::clamp(bj + dy, 0, g.n2 - 1);
            const Vec2 t = g.coord(bi + dx, bj + dy);
            const Vec2 u = rotate_point(t - tb, rot) / a;
            const Complex phi =
                std::polar(1.0, -r * (t.norm2() - tb.norm2())) * mother_eval(cfg.wavelet, u);
            acc += img.at(ci, cj) * phi;
        }
    }
    const double norm =
        cfg.normalization == EdgeNormalization::PaperDiscrete ? 1.0 / (a * a) : 1.0 / a;
    return acc * norm;
}

std::vector<RealField2D> directional_maps(const RealField2D& img, const EdgeConfig& cfg) {
    cfg.validate();
    if (img.min_value() < -1e-12 || img.max_value() > 1.0 + 1e-12)
        throw DomainError("directional_maps: image values must lie in [0, 1]");
    ComplexField2D fc(img.spec);
    for (std::size_t i = 0; i < img.values.size(); ++i) fc.values[i] = img.values[i];
    const ComplexField2D padded = pad_replicate(fc, 2);
    const double r = cfg.chirp_rate();
    require_chirp_bandwidth(padded.spec, r);
    const ComplexField2D chirped = chirp_multiply(padded, r, +1);
    const ComplexField2D F = centered_dft(chirped, -1);

    // The windowed formula applies the unconjugated wavelet with the chirp
    // e^{-jr(|t|^2 - |b|^2)}; conjugating it flips both the chirp sign and
    // the carrier, and the conjugated kernel of the plain daughter supplies
    // exactly that carrier flip. The correlation below therefore computes
    // the conjugate of the windowed coefficient, whose magnitude is what
    // the maps report.
    const std::size_t na = cfg.angles.size();
    std::vector<RealField2D> maps(static_cast<std::size_t>(cfg.n_scales) * na);
    parallel_for(maps.size(), [&](std::size_t idx) {
        const double a = cfg.scale(static_cast<int>(idx / na));
        const double theta = cfg.angles[idx % na];
        const double daughter_angle = cfg.rotation_sign == -1 ? theta : -theta;
        const ComplexField2D k =
            daughter_kernel(cfg.wavelet, padded.spec, {0.0, 0.0}, a, daughter_angle);
        ComplexField2D K = centered_dft(k, -1);
        for (std::size_t i = 0; i < K.values.size(); ++i)
            K.values[i] = F.values[i] * std::conj(K.values[i]);
        ComplexField2D plane = chirp_multiply(centered_idft(K), r, -1);
        plane = crop_center(plane, img.spec);
        RealField2D mag(img.spec);
        const double norm =
            cfg.normalization == EdgeNormalization::PaperDiscrete ? 1.0 / a : 1.0;
        for (std::size_t i = 0; i < plane.values.size(); ++i)
            mag.values[i] = std::abs(plane.values[i]) * norm;
        maps[idx] = std::move(mag);
    });
    return maps;
}

RealField2D fuse(const std::vector<RealField2D>& stack, const EdgeConfig& cfg) {
    cfg.validate();
    if (stack.empty()) throw EmptyStack("fuse: channel stack is empty");
    const std::size_t na = cfg.angles.size();
    if (stack.size() != static_cast<std::size_t>(cfg.n_scales) * na)
        throw GridMismatch("fuse: stack size does not match the configured channels");
    for (const RealField2D& ch : stack)
        if (!(ch.spec == stack.front().spec))
            throw GridMismatch("fuse: channels on differing grids");

    RealField2D out(stack.front().spec);
    if (cfg.fusion == FusionMethod::MaxAbs) {
        for (std::size_t ci = 0; ci < stack.size(); ++ci) {
            const double mx = stack[ci].max_value();
            if (!(mx > 0.0)) continue;
            for (std::size_t i = 0; i < out.values.size(); ++i)
                out.values[i] = std::max(out.values[i], stack[ci].values[i] / mx);
        }
    } else {
        for (std::size_t ci = 0; ci < stack.size(); ++ci) {
            const double w = 1.0 / cfg.scale(static_cast<int>(ci / na));
            for (std::size_t i = 0; i < out.values.size(); ++i)
                out.values[i] += w * stack[ci].values[i];
        }
    }
    const double mx = out.max_value();
    if (mx > 0.0)
        for (double& v : out.values) v /= mx;
    return out;
}

ThresholdResult threshold_field(const RealField2D& mag, ThresholdMethod method,
                                double fixed_tau) {
    if (mag.min_value() < -1e-12 || mag.max_value() > 1.0 + 1e-12)
        throw DomainError("threshold_field: magnitudes must lie in [0, 1]");
    ThresholdResult res;
    res.binary.assign(mag.values.size(), 0);
    if (method == ThresholdMethod::Fixed) {
        res.tau = fixed_tau;
        for (std::size_t i = 0; i < mag.values.size(); ++i)
            res.binary[i] = mag.values[i] >= res.tau ? 1 : 0;
        return res;
    }

    constexpr int kBins = 256;
    std::vector<double> hist(kBins, 0.0);
    for (double v : mag.values) {
        int bin = static_cast<int>(std::max(v, 0.0) * kBins);
        hist[std::min(bin, kBins - 1)] += 1.0;
    }
    const double total = static_cast<double>(mag.values.size());
    double sum_all = 0.0;
    for (int b = 0; b < kBins; ++b) sum_all += b * hist[b];

    int best_bin = -1;
    double best_var = 0.0;
    double w0 = 0.0, sum0 = 0.0;
    for (int k = 0; k + 1 < kBins; ++k) {
        w0 += hist[k];
        sum0 += k * hist[k];
        const double w1 = total - w0;
        if (w0 <= 0.0 || w1 <= 0.0) continue;
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var) {
            best_var = var;
            best_bin = k;
        }
    }
    if (best_bin < 0) {
        res.degenerate = true;
        res.tau = 2.0;  // above every admissible magnitude: all-false
        return res;
    }
    res.tau = static_cast<double>(best_bin + 1) / kBins;
    for (std::size_t i = 0; i < mag.values.size(); ++i)
        res.binary[i] = mag.values[i] >= res.tau ? 1 : 0;
    return res;
}

EdgeMap edge_detect(const RealField2D& img, const EdgeConfig& cfg) {
    EdgeMap map;
    map.config = cfg;
    map.per_channel = directional_maps(img, cfg);
    map.magnitude = fuse(map.per_channel, cfg);
    ThresholdResult th = threshold_field(map.magnitude, cfg.threshold, cfg.fixed_tau);
    map.binary = std::move(th.binary);
    map.threshold_value = th.tau;
    map.degenerate_histogram = th.degenerate;
    return map;
}

}  // namespace plcwt
