#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "plcwt/theorems.hpp"

using namespace plcwt;

namespace {

WaveletSpec test_wavelet(double sigma = 0.8, Vec2 k0 = {5.0, 0.0}) {
    WaveletSpec w;
    w.k0 = k0;
    w.sigma = sigma;
    return w;
}

ComplexField2D moment_signal(const GridSpec& g, Vec2 center, Vec2 k, double chirp) {
    return testutil::gaussian_packet(g, 0.95, center, k, chirp);
}

}  // namespace

TEST_CASE("guarded convolution equals the linear quadrature sum") {
    const GridSpec g{10, 10, 0.5};
    const ComplexField2D f = testutil::random_field(g, 61);
    const ComplexField2D h = testutil::random_field(g, 62);
    const ComplexField2D fast = convolve_full(f, h);
    const double d2 = g.spacing * g.spacing;
    double worst = 0.0;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const Vec2 x = g.coord(i, j);
            Complex acc{0.0, 0.0};
            for (int k1 = 0; k1 < g.n1; ++k1)
                for (int k2 = 0; k2 < g.n2; ++k2) {
                    const Vec2 t = g.coord(k1, k2);
                    const Vec2 d = x - t;
                    const int i2 = g.index1(d.x), j2 = g.index2(d.y);
                    if (i2 < 0 || i2 >= g.n1 || j2 < 0 || j2 >= g.n2) continue;
                    acc += f.at(k1, k2) * h.at(i2, j2);
                }
            worst = std::max(worst, std::abs(fast.at(i, j) - acc * d2));
        }
    CHECK(worst < 1e-12 * fast.max_abs());
}

TEST_CASE("guarded correlation evaluates g at x + t without conjugation") {
    const GridSpec g{10, 10, 0.5};
    const ComplexField2D f = testutil::random_field(g, 71);
    const ComplexField2D h = testutil::random_field(g, 72);
    const ComplexField2D fast = correlate_full(f, h);
    const double d2 = g.spacing * g.spacing;
    double worst = 0.0;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const Vec2 x = g.coord(i, j);
            Complex acc{0.0, 0.0};
            for (int k1 = 0; k1 < g.n1; ++k1)
                for (int k2 = 0; k2 < g.n2; ++k2) {
                    const Vec2 t = g.coord(k1, k2);
                    const Vec2 s = x + t;
                    const int i2 = g.index1(s.x), j2 = g.index2(s.y);
                    if (i2 < 0 || i2 >= g.n1 || j2 < 0 || j2 >= g.n2) continue;
                    acc += f.at(k1, k2) * h.at(i2, j2);
                }
            worst = std::max(worst, std::abs(fast.at(i, j) - acc * d2));
        }
    CHECK(worst < 1e-12 * fast.max_abs());

    // the operator is directional: reflecting the output changes it for an
    // asymmetric pair
    CHECK(relative_l2_error(reflect(fast), fast) > 0.1);
}

TEST_CASE("rotation decoration of the wavelet operators collapses") {
    const GridSpec g{32, 32, 0.3};
    const WaveletSpec wf = test_wavelet(1.0);
    const WaveletSpec wg = test_wavelet(1.0, {4.0, 3.0});
    const ComplexField2D kf = daughter_kernel(wf, g, {0.0, 0.0}, 1.0, 0.0);
    const ComplexField2D kg = daughter_kernel(wg, g, {0.0, 0.0}, 1.0, 0.0);

    // the theta argument is provably inert
    const ComplexField2D c1 = wavelet_convolve(kf, kg, 0.3);
    const ComplexField2D c2 = wavelet_convolve(kf, kg, 2.1);
    for (std::size_t i = 0; i < c1.values.size(); ++i)
        CHECK(c1.values[i] == c2.values[i]);

    // Riemann sum of the rotation-decorated integrand at sample points:
    // sum_y psi_f(R_{-th} y) psi_g(R_{-th}(R_th t - y)) equals the plain
    // convolution after z = R_{-th} y
    const double theta = kPi / 5.0;
    const double d2 = g.spacing * g.spacing;
    const double peak = c1.max_abs();
    for (const Vec2 t : {Vec2{0.0, 0.0}, Vec2{0.6, -0.3}, Vec2{-0.9, 0.9}}) {
        const Vec2 rt = rotate_point(t, theta);
        Complex acc{0.0, 0.0};
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.n2; ++j) {
                const Vec2 y = g.coord(i, j);
                acc += mother_eval(wf, rotate_point(y, -theta)) *
                       mother_eval(wg, rotate_point(rt - y, -theta));
            }
        acc *= d2;
        const Complex fast = c1.at(g.index1(t.x), g.index2(t.y));
        CHECK(std::abs(fast - acc) < 1e-5 * peak);
    }
}

TEST_CASE("convolution and correlation theorems hold plane-wise") {
    const GridSpec g{12, 12, 0.5};
    const ComplexField2D f = testutil::band_limited_field(g, 81);
    const ComplexField2D h = testutil::band_limited_field(g, 82);
    const WaveletSpec wf = test_wavelet();
    const WaveletSpec wg = test_wavelet(0.7, {0.0, 5.5});
    const ScaleAngleGrid grid = log_scale_grid(0.8, 1.6, 2, 3);
    for (double ab : {0.0, 0.05}) {
        const LctParams m = ab == 0.0 ? fourier_params() : params_from_ab_ratio(ab);
        const TheoremReport conv = verify_convolution_theorem(f, h, wf, wg, m, grid);
        CHECK(conv.max_rel_error < 1e-10);
        CHECK(conv.plane_errors.size() == grid.plane_count());
        CHECK(!conv.config.empty());
        const TheoremReport corr = verify_correlation_theorem(f, h, wf, wg, m, grid);
        CHECK(corr.max_rel_error < 1e-10);
    }
}

TEST_CASE("plane-wise volume operators act per (scale, angle) cell") {
    const GridSpec g{12, 12, 0.5};
    const ComplexField2D f = testutil::random_field(g, 91);
    const ComplexField2D h = testutil::random_field(g, 92);
    const WaveletSpec w = test_wavelet();
    const ScaleAngleGrid grid = log_scale_grid(0.8, 1.6, 2, 2);
    const CoefficientVolume vf = pwt_forward(f, w, grid);
    const CoefficientVolume vh = pwt_forward(h, w, grid);
    const CoefficientVolume conv = convolve_in_b(vf, vh);
    const CoefficientVolume corr = correlate_in_b(vf, vh);
    for (std::size_t p = 0; p < conv.planes.size(); ++p) {
        CHECK(relative_l2_error(conv.planes[p],
                                cyclic_convolve(vf.planes[p], vh.planes[p])) < 1e-14);
        CHECK(relative_l2_error(corr.planes[p],
                                cyclic_convolve(reflect(vf.planes[p]), vh.planes[p])) <
              1e-14);
    }
}

TEST_CASE("logarithmic bound constant matches an independent series") {
    const double gamma = testutil::euler_gamma_series();
    const double ref = -gamma - 2.0 * std::log(2.0) - std::log(kPi);
    CHECK(std::abs(log_uncertainty_mu() - ref) < 1e-12);
}

TEST_CASE("uncertainty inequalities hold on the bundled signal family") {
    const GridSpec g{32, 32, 0.5};
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.04);
    const ScaleAngleGrid grid = log_scale_grid(0.5, 8.0, 8, 12);
    const std::vector<ComplexField2D> signals = {
        moment_signal(g, {0.0, 0.0}, {3.0, 0.0}, 0.0),
        moment_signal(g, {0.0, 0.0}, {3.0, 0.0}, 0.1),
        moment_signal(g, {0.5, -0.5}, {2.0, 2.0}, 0.0),
    };
    for (const ComplexField2D& f : signals) {
        const InequalityReport h2 = heisenberg(f, w, m, grid);
        CHECK(h2.satisfied);
        CHECK(h2.ratio >= 1.0);

        const InequalityReport gp = generalized_heisenberg(f, w, m, grid, 2.0);
        CHECK(std::abs(gp.lhs - h2.lhs) <= 1e-9 * std::abs(h2.lhs));
        CHECK(std::abs(gp.rhs - h2.rhs) <= 1e-9 * std::abs(h2.rhs));

        for (double p : {1.0, 1.5}) {
            const InequalityReport gr = generalized_heisenberg(f, w, m, grid, p);
            CHECK(gr.satisfied);
            CHECK(gr.ratio >= 1.0);
            CHECK(gr.rhs_per_scale.size() == grid.scales.size());
        }

        const InequalityReport lg = logarithmic_uncertainty(f, w, m, grid);
        CHECK(lg.satisfied);
        CHECK(lg.ratio >= 1.0);
    }
}

TEST_CASE("inequality evaluators reject invalid inputs") {
    const GridSpec g{16, 16, 0.5};
    const WaveletSpec w = test_wavelet();
    const LctParams m = fourier_params();
    const ScaleAngleGrid grid = log_scale_grid(0.5, 4.0, 4, 4);
    const ComplexField2D f = moment_signal(g, {0.0, 0.0}, {3.0, 0.0}, 0.0);
    CHECK_THROWS_AS(generalized_heisenberg(f, w, m, grid, 0.5), DomainError);
    CHECK_THROWS_AS(generalized_heisenberg(f, w, m, grid, 2.5), DomainError);

    ComplexField2D flat(g);
    for (Complex& v : flat.values) v = 1.0;
    CHECK_THROWS_AS(heisenberg(flat, w, m, grid), MomentOverflow);
}
