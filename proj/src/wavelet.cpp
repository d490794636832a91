#include "plcwt/wavelet.hpp"

#include <cmath>
#include <sstream>

namespace plcwt {

void WaveletSpec::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw DomainError("WaveletSpec: sigma must be positive and finite");
    if (kind == WaveletKind::Morlet2D && k0.norm() < 5.0)
        throw AdmissibilityError(
            "WaveletSpec: |k0| >= 5 required when the zero-mean correction "
            "is omitted");
}

Complex mother_eval(const WaveletSpec& w, Vec2 t) {
    const double env = std::exp(-t.norm2() / (2.0 * w.sigma * w.sigma));
    return std::polar(env, w.k0.dot(t));
}

Complex daughter_eval(const WaveletSpec& w, Vec2 b, double a, double theta, Vec2 t) {
    if (!(a > 0.0)) throw ScaleError("daughter_eval: scale must be positive");
    const Vec2 s = rotate_point(t - b, -theta);
    return mother_eval(w, {s.x / a, s.y / a}) / a;
}

ComplexField2D daughter_kernel(const WaveletSpec& w, const GridSpec& g, Vec2 b,
                               double a, double theta) {
    if (!(a > 0.0)) throw ScaleError("daughter_kernel: scale must be positive");
    w.validate();
    return sample_field(g, [&](Vec2 t) { return daughter_eval(w, b, a, theta, t); });
}

ComplexField2D lc_daughter_kernel(const WaveletSpec& w, const GridSpec& g, Vec2 b,
                                  double a, double theta, const LctParams& m) {
    m.validate();
    ComplexField2D out = daughter_kernel(w, g, b, a, theta);
    const double rate = m.chirp_in();
    const double b2 = b.norm2();
    for (int i = 0; i < g.n1; ++i) {
        const double x = g.coord1(i);
        for (int j = 0; j < g.n2; ++j) {
            const double y = g.coord2(j);
            out.at(i, j) *= std::polar(1.0, -rate * (x * x + y * y - b2));
        }
    }
    return out;
}

Complex chirped_mother_lct(const WaveletSpec& w, const LctParams& m, Vec2 xi) {
    const double s2 = w.sigma * w.sigma;
    const Vec2 u{xi.x / m.b - w.k0.x, xi.y / m.b - w.k0.y};
    const double mag = (s2 / m.b) * std::exp(-0.5 * s2 * u.norm2());
    return std::polar(mag, m.chirp_out() * xi.norm2());
}

void AdmissibilityConstant::validate() const {
    if (!(value > 0.0) || !std::isfinite(value))
        throw AdmissibilityError("admissibility constant must be finite and positive");
}

namespace {

double admissibility_pass(const WaveletSpec& w, const LctParams& m, Vec2 xi_probe,
                          double a_min, double a_max, int n_scales, int n_angles) {
    const double h = std::log(a_max / a_min) / (n_scales - 1);
    const double wt = kTwoPi / n_angles;
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n_scales) * n_angles);
    for (int i = 0; i < n_scales; ++i) {
        const double a = a_min * std::exp(i * h);
        const double wa = (i == 0 || i == n_scales - 1) ? 0.5 * h : h;
        for (int k = 0; k < n_angles; ++k) {
            const double theta = wt * k;
            const Vec2 xi = rotate_point(xi_probe, -theta) * a;
            // 2 pi B rescales the kernel-normalized transform back to the
            // plain-FT convention; this is the constant that makes the
            // inversion and energy identities close and reduces to the
            // classical admissibility integral at the Fourier matrix.
            const double s = kTwoPi * m.b;
            terms.push_back(std::norm(chirped_mother_lct(w, m, xi)) * s * s * wa * wt);
        }
    }
    return pairwise_sum(std::span<const double>(terms));
}

}  // namespace

AdmissibilityConstant admissibility(const WaveletSpec& w, const LctParams& m,
                                    const ScaleQuadrature& aq, Vec2 xi_probe) {
    w.validate();
    m.validate();
    if (!(xi_probe.norm2() > 0.0))
        throw DomainError("admissibility: xi_probe must be nonzero");
    if (!(aq.a_min > 0.0) || !(aq.a_max > aq.a_min) || aq.n_scales < 2 || aq.n_angles < 1)
        throw DomainError("admissibility: invalid quadrature spec");

    int ns = aq.n_scales;
    int na = aq.n_angles;
    double prev = admissibility_pass(w, m, xi_probe, aq.a_min, aq.a_max, ns, na);
    for (int r = 0; r < aq.max_refinements; ++r) {
        ns *= 2;
        na *= 2;
        const double cur = admissibility_pass(w, m, xi_probe, aq.a_min, aq.a_max, ns, na);
        const double est = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        if (est < aq.target_rel_error) {
            AdmissibilityConstant out;
            out.value = cur;
            std::ostringstream desc;
            desc << "log-a trapezoid [" << aq.a_min << ", " << aq.a_max << "] x " << ns
                 << " nodes, " << na << " angles";
            out.quadrature = desc.str();
            out.relative_error_estimate = est;
            out.validate();
            return out;
        }
        prev = cur;
    }
    throw DivergenceError(
        "admissibility quadrature failed to stabilize within the refinement budget");
}

}  // namespace plcwt
