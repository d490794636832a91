#include "plcwt/plcwt.hpp"

#include <cmath>

namespace plcwt {

void ScaleAngleGrid::validate() const {
    if (scales.empty() || angles.empty()) throw DomainError("ScaleAngleGrid: empty axis");
    if (scales.size() != weights_a.size() || angles.size() != weights_theta.size())
        throw DomainError("ScaleAngleGrid: weight/axis length mismatch");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0)) throw ScaleError("ScaleAngleGrid: scales must be positive");
        if (i > 0 && !(scales[i] > scales[i - 1]))
            throw ScaleError("ScaleAngleGrid: scales must be strictly increasing");
        if (!(weights_a[i] > 0.0)) throw DomainError("ScaleAngleGrid: nonpositive weight");
    }
    double wsum = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (angles[i] < 0.0 || angles[i] >= kTwoPi)
            throw DomainError("ScaleAngleGrid: angles must lie in [0, 2 pi)");
        if (i > 0 && !(angles[i] > angles[i - 1]))
            throw DomainError("ScaleAngleGrid: angles must be strictly increasing");
        if (!(weights_theta[i] > 0.0))
            throw DomainError("ScaleAngleGrid: nonpositive weight");
        wsum += weights_theta[i];
    }
    if (std::abs(wsum - kTwoPi) > 1e-10)
        throw DomainError("ScaleAngleGrid: theta weights must sum to 2 pi");
}

namespace {

// Trapezoid in log a with the a^-2 Jacobian of da/a^3 folded in.
std::vector<double> log_trapezoid_weights(const std::vector<double>& scales) {
    const std::size_t n = scales.size();
    std::vector<double> w(n);
    if (n == 1) {
        w[0] = 1.0 / (scales[0] * scales[0]);
        return w;
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::log(scales[i]);
    for (std::size_t i = 0; i < n; ++i) {
        double h = 0.0;
        if (i > 0) h += 0.5 * (x[i] - x[i - 1]);
        if (i + 1 < n) h += 0.5 * (x[i + 1] - x[i]);
        w[i] = h / (scales[i] * scales[i]);
    }
    return w;
}

}  // namespace

ScaleAngleGrid log_scale_grid(double a_min, double a_max, int n_scales, int n_angles) {
    if (!(a_min > 0.0) || !(a_max > a_min) || n_scales < 2 || n_angles < 1)
        throw DomainError("log_scale_grid: invalid parameters");
    ScaleAngleGrid g;
    const double h = std::log(a_max / a_min) / (n_scales - 1);
    for (int i = 0; i < n_scales; ++i) g.scales.push_back(a_min * std::exp(i * h));
    g.weights_a = log_trapezoid_weights(g.scales);
    for (int k = 0; k < n_angles; ++k) {
        g.angles.push_back(kTwoPi * k / n_angles);
        g.weights_theta.push_back(kTwoPi / n_angles);
    }
    g.validate();
    return g;
}

ScaleAngleGrid edge_scale_grid(double base, int n_scales, int n_angles) {
    if (!(base > 1.0) || n_scales < 1 || n_angles < 1)
        throw DomainError("edge_scale_grid: invalid parameters");
    ScaleAngleGrid g;
    for (int k = 1; k <= n_scales; ++k) g.scales.push_back(std::pow(base, k));
    g.weights_a = log_trapezoid_weights(g.scales);
    for (int k = 0; k < n_angles; ++k) {
        g.angles.push_back(kPi * k / n_angles);
        g.weights_theta.push_back(kTwoPi / n_angles);
    }
    g.validate();
    return g;
}

void CoefficientVolume::validate() const {
    grid.validate();
    spatial.validate();
    if (planes.size() != grid.plane_count())
        throw GridMismatch("CoefficientVolume: plane count mismatch");
    for (const ComplexField2D& p : planes)
        if (!(p.spec == planes.front().spec))
            throw GridMismatch("CoefficientVolume: planes on differing grids");
}

Complex plcwt_direct(const ComplexField2D& f, const WaveletSpec& w, const LctParams& m,
                     Vec2 b, double a, double theta) {
    require_chirp_bandwidth(f.spec, m.chirp_in());
    const ComplexField2D k = lc_daughter_kernel(w, f.spec, b, a, theta, m);
    std::vector<Complex> terms(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
        terms[i] = f.values[i] * std::conj(k.values[i]);
    const double d2 = f.spec.spacing * f.spec.spacing;
    return pairwise_sum(std::span<const Complex>(terms)) * d2;
}

CoefficientVolume plcwt_forward(const ComplexField2D& f, const WaveletSpec& w,
                                const LctParams& m, const ScaleAngleGrid& g,
                                const TransformOptions& opt) {
    w.validate();
    m.validate();
    g.validate();
    const ComplexField2D padded = pad_zero(f, opt.pad_factor);
    require_chirp_bandwidth(padded.spec, m.chirp_in());
    const ComplexField2D chirped = chirp_multiply(padded, m.chirp_in(), +1);
    const ComplexField2D F = centered_dft(chirped, -1);

    CoefficientVolume v;
    v.grid = g;
    v.spatial = f.spec;
    v.params = m;
    v.wavelet = w;
    v.planes.resize(g.plane_count());
    const std::size_t na = g.angles.size();
    parallel_for(g.plane_count(), [&](std::size_t idx) {
        const std::size_t si = idx / na;
        const std::size_t ai = idx % na;
        const ComplexField2D k =
            daughter_kernel(w, padded.spec, {0.0, 0.0}, g.scales[si], g.angles[ai]);
        ComplexField2D K = centered_dft(k, -1);
        for (std::size_t i = 0; i < K.values.size(); ++i)
            K.values[i] = F.values[i] * std::conj(K.values[i]);
        ComplexField2D plane = centered_idft(K);
        plane = chirp_multiply(plane, m.chirp_in(), -1);
        if (opt.crop) plane = crop_center(plane, f.spec);
        v.planes[idx] = std::move(plane);
    });
    return v;
}

CoefficientVolume pwt_forward(const ComplexField2D& f, const WaveletSpec& w,
                              const ScaleAngleGrid& g, const TransformOptions& opt) {
    return plcwt_forward(f, w, fourier_params(), g, opt);
}

ComplexField2D plcwt_inverse(const CoefficientVolume& v, const AdmissibilityConstant& c) {
    v.validate();
    c.validate();
    const GridSpec pspec = v.planes.front().spec;
    const double rate = v.params.chirp_in();
    const std::size_t na = v.grid.angles.size();

    std::vector<ComplexField2D> contrib(v.planes.size());
    parallel_for(v.planes.size(), [&](std::size_t idx) {
        const std::size_t si = idx / na;
        const std::size_t ai = idx % na;
        const ComplexField2D k = daughter_kernel(v.wavelet, pspec, {0.0, 0.0},
                                                 v.grid.scales[si], v.grid.angles[ai]);
        const ComplexField2D wt = chirp_multiply(v.planes[idx], rate, +1);
        ComplexField2D conv = cyclic_convolve(wt, k);
        const double weight = v.grid.weights_a[si] * v.grid.weights_theta[ai];
        for (Complex& x : conv.values) x *= weight;
        contrib[idx] = std::move(conv);
    });

    ComplexField2D acc(pspec);
    for (const ComplexField2D& p : contrib)
        for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += p.values[i];
    acc = chirp_multiply(acc, rate, -1);
    const double inv_c = 1.0 / c.value;
    for (Complex& x : acc.values) x *= inv_c;
    if (!(pspec == v.spatial)) acc = crop_center(acc, v.spatial);
    return acc;
}

double energy(const CoefficientVolume& v) {
    v.validate();
    const std::size_t na = v.grid.angles.size();
    std::vector<double> terms(v.planes.size());
    for (std::size_t idx = 0; idx < v.planes.size(); ++idx) {
        const double e = v.planes[idx].l2_norm();
        terms[idx] = e * e * v.grid.weights_a[idx / na] * v.grid.weights_theta[idx % na];
    }
    return pairwise_sum(std::span<const double>(terms));
}

Complex orthogonality_inner(const CoefficientVolume& v1, const CoefficientVolume& v2) {
    v1.validate();
    v2.validate();
    if (v1.planes.size() != v2.planes.size() ||
        !(v1.planes.front().spec == v2.planes.front().spec))
        throw GridMismatch("orthogonality_inner: volumes on differing lattices");
    const std::size_t na = v1.grid.angles.size();
    const double d2 = v1.planes.front().spec.spacing * v1.planes.front().spec.spacing;
    std::vector<Complex> terms(v1.planes.size());
    for (std::size_t idx = 0; idx < v1.planes.size(); ++idx) {
        const ComplexField2D& p = v1.planes[idx];
        const ComplexField2D& q = v2.planes[idx];
        std::vector<Complex> prod(p.values.size());
        for (std::size_t i = 0; i < p.values.size(); ++i)
            prod[i] = p.values[i] * std::conj(q.values[i]);
        terms[idx] = pairwise_sum(std::span<const Complex>(prod)) * d2 *
                     v1.grid.weights_a[idx / na] * v1.grid.weights_theta[idx % na];
    }
    return pairwise_sum(std::span<const Complex>(terms));
}

ComplexField2D spectral_factorization(const ComplexField2D& f, const WaveletSpec& w,
                                      const LctParams& m, double a, double theta,
                                      const TransformOptions& opt) {
    w.validate();
    m.validate();
    const ComplexField2D padded = pad_zero(f, opt.pad_factor);
    const ComplexField2D F = lct_forward(padded, m);
    const ComplexField2D k = daughter_kernel(w, padded.spec, {0.0, 0.0}, a, theta);
    const ComplexField2D K = centered_dft(k, -1);
    ComplexField2D G(F.spec);
    for (std::size_t i = 0; i < F.values.size(); ++i)
        G.values[i] = F.values[i] * std::conj(K.values[i]);
    ComplexField2D plane = lct_inverse(G, m);
    if (opt.crop) plane = crop_center(plane, f.spec);
    return plane;
}

ParsevalDiagnostic parseval_diagnostic(const CoefficientVolume& v,
                                       const ComplexField2D& f) {
    v.validate();
    ParsevalDiagnostic d;
    const double nf = f.l2_norm();
    d.signal_energy = nf * nf;
    for (const ComplexField2D& p : v.planes) {
        const double e = p.l2_norm();
        d.plane_energy.push_back(e * e);
        d.ratio.push_back(d.signal_energy > 0.0 ? (e * e) / d.signal_energy : 0.0);
    }
    return d;
}

}  // namespace plcwt
