#include "plcwt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plcwt/fft.hpp"

namespace plcwt {

void GridSpec::validate() const {
    if (n1 < 2 || n2 < 2 || n1 % 2 != 0 || n2 % 2 != 0)
        throw GridMismatch("GridSpec: sample counts must be even and >= 2");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw GridMismatch("GridSpec: spacing must be positive and finite");
}

double ComplexField2D::l2_norm() const {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = std::norm(values[i]);
    return spec.spacing * std::sqrt(pairwise_sum(std::span<const double>(sq)));
}

double ComplexField2D::max_abs() const {
    double m = 0.0;
    for (const Complex& v : values) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexField2D::all_finite() const {
    for (const Complex& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double RealField2D::max_value() const {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : values) m = std::max(m, v);
    return m;
}

double RealField2D::min_value() const {
    double m = std::numeric_limits<double>::infinity();
    for (double v : values) m = std::min(m, v);
    return m;
}

ComplexField2D sample_field(const GridSpec& g, const std::function<Complex(Vec2)>& fn) {
    ComplexField2D out(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) out.at(i, j) = fn(g.coord(i, j));
    return out;
}

void require_same_grid(const ComplexField2D& a, const ComplexField2D& b) {
    if (!(a.spec == b.spec)) throw GridMismatch("fields live on different grids");
}

ComplexField2D chirp_multiply(const ComplexField2D& f, double rate, int sign) {
    ComplexField2D out(f.spec);
    const double r = sign >= 0 ? rate : -rate;
    for (int i = 0; i < f.spec.n1; ++i) {
        const double x = f.spec.coord1(i);
        for (int j = 0; j < f.spec.n2; ++j) {
            const double y = f.spec.coord2(j);
            out.at(i, j) = f.at(i, j) * std::polar(1.0, r * (x * x + y * y));
        }
    }
    return out;
}

double chirp_phase_step(const GridSpec& g, double rate) {
    const double d = g.spacing;
    const double tmax = std::max(g.n1, g.n2) / 2 * d;
    return std::abs(rate) * (2.0 * tmax * d + d * d);
}

void require_chirp_bandwidth(const GridSpec& g, double rate) {
    if (chirp_phase_step(g, rate) > kPi)
        throw BandwidthError("chirp rate exceeds the grid's Nyquist phase-step bound");
}

GridSpec spectral_grid(const GridSpec& g) {
    if (g.n1 != g.n2)
        throw GridMismatch("spectral operations require square grids (single spacing)");
    return {g.n1, g.n2, kTwoPi / (g.n1 * g.spacing)};
}

ComplexField2D centered_dft(const ComplexField2D& f, int sign) {
    const GridSpec& g = f.spec;
    ComplexField2D out(spectral_grid(g));
    // t_k . u_m = 2 pi k m / n - pi k - pi m + pi n / 2 per axis, so the
    // centered transform is a checkerboarded DFT with a real global sign.
    std::vector<Complex> buf(f.values.size());
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const double par = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            buf[static_cast<std::size_t>(i) * g.n2 + j] = f.at(i, j) * par;
        }
    fft2_inplace(buf, g.n1, g.n2, sign < 0 ? -1 : +1);
    const double c = ((g.n1 / 2 + g.n2 / 2) % 2 == 0) ? 1.0 : -1.0;
    const double w = g.spacing * g.spacing * c;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const double par = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            out.at(i, j) = buf[static_cast<std::size_t>(i) * g.n2 + j] * (w * par);
        }
    return out;
}

ComplexField2D centered_idft(const ComplexField2D& F) {
    ComplexField2D out = centered_dft(F, +1);
    const double inv = 1.0 / (kTwoPi * kTwoPi);
    for (Complex& v : out.values) v *= inv;
    return out;
}

ComplexField2D cyclic_convolve(const ComplexField2D& f, const ComplexField2D& g) {
    require_same_grid(f, g);
    ComplexField2D F = centered_dft(f, -1);
    const ComplexField2D G = centered_dft(g, -1);
    for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= G.values[i];
    return centered_idft(F);
}

ComplexField2D pad_zero(const ComplexField2D& f, int factor) {
    if (factor < 1) throw GridMismatch("pad factor must be >= 1");
    if (factor == 1) return f;
    const GridSpec& g = f.spec;
    GridSpec big{g.n1 * factor, g.n2 * factor, g.spacing};
    ComplexField2D out(big);
    const int o1 = (big.n1 - g.n1) / 2;
    const int o2 = (big.n2 - g.n2) / 2;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) out.at(i + o1, j + o2) = f.at(i, j);
    return out;
}

ComplexField2D pad_replicate(const ComplexField2D& f, int factor) {
    if (factor < 1) throw GridMismatch("pad factor must be >= 1");
    if (factor == 1) return f;
    const GridSpec& g = f.spec;
    GridSpec big{g.n1 * factor, g.n2 * factor, g.spacing};
    ComplexField2D out(big);
    const int o1 = (big.n1 - g.n1) / 2;
    const int o2 = (big.n2 - g.n2) / 2;
    for (int i = 0; i < big.n1; ++i) {
        const int si = std::clamp(i - o1, 0, g.n1 - 1);
        for (int j = 0; j < big.n2; ++j) {
            const int sj = std::clamp(j - o2, 0, g.n2 - 1);
            out.at(i, j) = f.at(si, sj);
        }
    }
    return out;
}

ComplexField2D crop_center(const ComplexField2D& f, const GridSpec& target) {
    target.validate();
    if (std::abs(target.spacing - f.spec.spacing) > 1e-12 * f.spec.spacing ||
        target.n1 > f.spec.n1 || target.n2 > f.spec.n2)
        throw GridMismatch("crop_center: incompatible target grid");
    ComplexField2D out(target);
    const int o1 = (f.spec.n1 - target.n1) / 2;
    const int o2 = (f.spec.n2 - target.n2) / 2;
    for (int i = 0; i < target.n1; ++i)
        for (int j = 0; j < target.n2; ++j) out.at(i, j) = f.at(i + o1, j + o2);
    return out;
}

ComplexField2D reflect(const ComplexField2D& f) {
    ComplexField2D out(f.spec);
    const int n1 = f.spec.n1, n2 = f.spec.n2;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) out.at(i, j) = f.at((n1 - i) % n1, (n2 - j) % n2);
    return out;
}

double relative_l2_error(const ComplexField2D& approx, const ComplexField2D& ref) {
    require_same_grid(approx, ref);
    std::vector<double> sq(ref.values.size());
    for (std::size_t i = 0; i < ref.values.size(); ++i)
        sq[i] = std::norm(approx.values[i] - ref.values[i]);
    const double num = std::sqrt(pairwise_sum(std::span<const double>(sq)));
    double den = 0.0;
    for (std::size_t i = 0; i < ref.values.size(); ++i) den += std::norm(ref.values[i]);
    den = std::sqrt(den);
    return den > 0.0 ? num / den : num;
}

double max_relative_error(const ComplexField2D& a, const ComplexField2D& b) {
    require_same_grid(a, b);
    double num = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        num = std::max(num, std::abs(a.values[i] - b.values[i]));
    const double den = std::max(a.max_abs(), b.max_abs());
    return den > 0.0 ? num / den : num;
}

}  // namespace plcwt
