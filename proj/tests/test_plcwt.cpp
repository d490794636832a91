#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "plcwt/plcwt.hpp"

using namespace plcwt;

namespace {

WaveletSpec test_wavelet() {
    WaveletSpec w;
    w.k0 = {5.0, 0.0};
    w.sigma = 0.8;
    return w;
}

}  // namespace

TEST_CASE("scale-angle grid construction and validation") {
    const ScaleAngleGrid g = log_scale_grid(0.5, 8.0, 5, 6);
    CHECK(g.scales.size() == 5);
    CHECK(g.scales.front() == doctest::Approx(0.5));
    CHECK(g.scales.back() == doctest::Approx(8.0));
    CHECK(g.plane_count() == 30);
    CHECK(g.plane_index(2, 3) == 15);
    double wsum = 0.0;
    for (double w : g.weights_theta) wsum += w;
    CHECK(wsum == doctest::Approx(kTwoPi));
    // trapezoid weights carry the a^-2 Jacobian
    const double h = std::log(8.0 / 0.5) / 4.0;
    CHECK(g.weights_a[0] == doctest::Approx(0.5 * h / (0.5 * 0.5)));
    CHECK(g.weights_a[2] == doctest::Approx(h / (g.scales[2] * g.scales[2])));

    CHECK_THROWS_AS(log_scale_grid(0.0, 1.0, 4, 4), DomainError);
    CHECK_THROWS_AS(log_scale_grid(2.0, 1.0, 4, 4), DomainError);
    ScaleAngleGrid bad = g;
    bad.weights_theta[0] *= 2.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = g;
    bad.scales[1] = bad.scales[0];
    CHECK_THROWS_AS(bad.validate(), ScaleError);
}

TEST_CASE("edge ladder grid") {
    const ScaleAngleGrid g = edge_scale_grid(1.5, 5, 8);
    CHECK(g.scales.size() == 5);
    CHECK(g.scales[0] == doctest::Approx(1.5));
    CHECK(g.scales[4] == doctest::Approx(std::pow(1.5, 5)));
    CHECK(g.angles[1] == doctest::Approx(kPi / 8.0));
    CHECK(g.angles.back() < kPi);
}

TEST_CASE("fast transform equals the direct inner product everywhere") {
    const GridSpec g{12, 12, 0.5};
    const ComplexField2D f = testutil::band_limited_field(g, 7);
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.06);
    const ScaleAngleGrid grid = log_scale_grid(0.8, 1.6, 2, 3);

    // the factor-2 guard band makes the cyclic fast path agree with the
    // non-periodic direct sum at every sample
    const CoefficientVolume v = plcwt_forward(f, w, m, grid);
    double worst = 0.0, peak = 0.0;
    for (std::size_t si = 0; si < grid.scales.size(); ++si)
        for (std::size_t ai = 0; ai < grid.angles.size(); ++ai) {
            const ComplexField2D& plane = v.plane(si, ai);
            peak = std::max(peak, plane.max_abs());
            for (int i = 0; i < g.n1; ++i)
                for (int j = 0; j < g.n2; ++j) {
                    const Complex direct = plcwt_direct(f, w, m, g.coord(i, j),
                                                        grid.scales[si], grid.angles[ai]);
                    worst = std::max(worst, std::abs(plane.at(i, j) - direct));
                }
        }
    CHECK(worst < 1e-10 * peak);
}

TEST_CASE("guard padding leaves interior coefficients unchanged") {
    const GridSpec g{16, 16, 0.5};
    const ComplexField2D f = testutil::random_field(g, 17, 4.0);
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.04);
    const ScaleAngleGrid grid = log_scale_grid(0.5, 1.0, 2, 2);
    const CoefficientVolume v2 = plcwt_forward(f, w, m, grid, TransformOptions{2, true});
    const CoefficientVolume v4 = plcwt_forward(f, w, m, grid, TransformOptions{4, true});
    for (std::size_t p = 0; p < v2.planes.size(); ++p)
        CHECK(relative_l2_error(v2.planes[p], v4.planes[p]) < 1e-10);
}

TEST_CASE("Fourier-matrix transform reduces to the plain wavelet transform") {
    const GridSpec g{16, 16, 0.5};
    const ComplexField2D f = testutil::random_field(g, 27);
    const WaveletSpec w = test_wavelet();
    const ScaleAngleGrid grid = log_scale_grid(0.7, 2.0, 3, 4);
    const CoefficientVolume a = pwt_forward(f, w, grid);
    const CoefficientVolume b = plcwt_forward(f, w, fourier_params(), grid);
    for (std::size_t p = 0; p < a.planes.size(); ++p)
        for (std::size_t i = 0; i < a.planes[p].values.size(); ++i)
            CHECK(a.planes[p].values[i] == b.planes[p].values[i]);
}

TEST_CASE("spectral factorization equals the step-wise pipeline") {
    const GridSpec g{16, 16, 0.5};
    const ComplexField2D f = testutil::random_field(g, 37);
    const WaveletSpec w = test_wavelet();
    for (double ab : {0.0, 0.05}) {
        const LctParams m = ab == 0.0 ? fourier_params() : params_from_ab_ratio(ab);
        const ScaleAngleGrid grid = log_scale_grid(0.9, 1.8, 2, 2);
        const CoefficientVolume v = plcwt_forward(f, w, m, grid);
        for (std::size_t si = 0; si < grid.scales.size(); ++si)
            for (std::size_t ai = 0; ai < grid.angles.size(); ++ai) {
                const ComplexField2D alt = spectral_factorization(
                    f, w, m, grid.scales[si], grid.angles[ai]);
                CHECK(relative_l2_error(alt, v.plane(si, ai)) < 1e-12);
            }
    }
}

TEST_CASE("energy closes against the admissibility constant") {
    // the spacing must resolve the smallest daughter's carrier (k0 / a_min
    // below the grid Nyquist) and the carrier-modulated Gaussian keeps the
    // spectrum inside the annulus the scale ladder reaches
    const GridSpec g{32, 32, 0.25};
    const ComplexField2D f = testutil::gaussian_packet(g, 0.7, {0.0, 0.0}, {3.5, 0.0}, 0.0);
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.05);
    const ScaleAngleGrid grid = log_scale_grid(0.5, 8.0, 12, 16);
    const CoefficientVolume v = plcwt_forward(f, w, m, grid, TransformOptions{2, false});
    const AdmissibilityConstant c = admissibility(w, m, {}, w.k0);
    const double nf = f.l2_norm();
    CHECK(energy(v) / (c.value * nf * nf) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("self inner product equals the energy") {
    const GridSpec g{16, 16, 0.5};
    const ComplexField2D f = testutil::gaussian_packet(g, 1.2, {0.0, 0.0}, {3.0, 0.0}, 0.0);
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.03);
    const ScaleAngleGrid grid = log_scale_grid(0.5, 4.0, 6, 8);
    const CoefficientVolume v = plcwt_forward(f, w, m, grid, TransformOptions{2, false});
    const Complex inner = orthogonality_inner(v, v);
    CHECK(inner.real() == doctest::Approx(energy(v)).epsilon(1e-12));
    CHECK(std::abs(inner.imag()) < 1e-12 * inner.real());
}

TEST_CASE("inner product is sesquilinear across two signals") {
    const GridSpec g{16, 16, 0.5};
    const ComplexField2D f1 = testutil::gaussian_packet(g, 1.2, {0.0, 0.0}, {3.0, 0.0}, 0.0);
    const ComplexField2D f2 = testutil::gaussian_packet(g, 1.0, {0.5, 0.0}, {2.5, 1.0}, 0.0);
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.03);
    const ScaleAngleGrid grid = log_scale_grid(0.5, 4.0, 5, 6);
    const TransformOptions opt{2, false};
    const CoefficientVolume v1 = plcwt_forward(f1, w, m, grid, opt);
    const CoefficientVolume v2 = plcwt_forward(f2, w, m, grid, opt);
    const Complex i12 = orthogonality_inner(v1, v2);
    const Complex i21 = orthogonality_inner(v2, v1);
    CHECK(std::abs(i12 - std::conj(i21)) < 1e-12 * std::abs(i12));
}

TEST_CASE("reconstruction recovers the signal") {
    const GridSpec g{32, 32, 0.25};
    const ComplexField2D f = testutil::gaussian_packet(g, 0.7, {0.0, 0.0}, {3.5, 0.0}, 0.0);
    const WaveletSpec w = test_wavelet();
    const LctParams m = params_from_ab_ratio(0.05);
    const AdmissibilityConstant c = admissibility(w, m, {}, w.k0);
    const ScaleAngleGrid grid = log_scale_grid(0.5, 8.0, 12, 16);
    const CoefficientVolume v = plcwt_forward(f, w, m, grid, TransformOptions{2, false});
    const ComplexField2D rec = plcwt_inverse(v, c);
    CHECK(relative_l2_error(rec, f) < 5e-2);
}

TEST_CASE("translation covariance for on-lattice shifts") {
    // shifting the signal shifts every coefficient plane by the same offset
    // (the chirp bookkeeping is part of the coefficient definition)
    const GridSpec g{32, 32, 0.5};
    const ComplexField2D f = testutil::gaussian_packet(g, 1.0, {0.0, 0.0}, {3.0, 0.0}, 0.0);
    const Vec2 shift{2.0 * g.spacing, -3.0 * g.spacing};
    const ComplexField2D fs = testutil::gaussian_packet(g, 1.0, shift, {3.0, 0.0}, 0.0);
    const WaveletSpec w = test_wavelet();
    const ScaleAngleGrid grid = log_scale_grid(0.8, 1.6, 2, 3);

    // at the Fourier matrix the covariance is a pure displacement
    const CoefficientVolume v = pwt_forward(f, w, grid);
    const CoefficientVolume vs = pwt_forward(fs, w, grid);
    const int di = 2, dj = -3;
    double worst = 0.0;
    for (std::size_t p = 0; p < v.planes.size(); ++p)
        for (int i = 4; i < g.n1 - 4; ++i)
            for (int j = 4; j < g.n2 - 4; ++j) {
                const Complex expect = v.planes[p].at(i, j);
                const Complex got = vs.planes[p].at(i + di, j + dj);
                worst = std::max(worst, std::abs(got - expect));
            }
    CHECK(worst < 1e-6);
}

TEST_CASE("volume validation rejects inconsistent planes") {
    const GridSpec g{8, 8, 0.5};
    const ComplexField2D f = testutil::random_field(g, 47);
    const WaveletSpec w = test_wavelet();
    CoefficientVolume v = pwt_forward(f, w, log_scale_grid(0.8, 1.6, 2, 2));
    CHECK_NOTHROW(v.validate());
    v.planes.pop_back();
    CHECK_THROWS_AS(v.validate(), GridMismatch);
}

TEST_CASE("parseval diagnostic reports ratios without asserting them") {
    const GridSpec g{16, 16, 0.5};
    const ComplexField2D f = testutil::gaussian_packet(g, 1.2, {0.0, 0.0}, {3.0, 0.0}, 0.0);
    const WaveletSpec w = test_wavelet();
    const CoefficientVolume v = pwt_forward(f, w, log_scale_grid(0.8, 1.6, 2, 2));
    const ParsevalDiagnostic d = parseval_diagnostic(v, f);
    CHECK(d.plane_energy.size() == v.planes.size());
    const double nf = f.l2_norm();
    CHECK(d.signal_energy == doctest::Approx(nf * nf));
    for (std::size_t i = 0; i < d.ratio.size(); ++i)
        CHECK(d.ratio[i] == doctest::Approx(d.plane_energy[i] / d.signal_energy));
}
