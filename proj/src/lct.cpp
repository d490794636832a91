#include "plcwt/lct.hpp"

#include <cmath>

namespace plcwt {

void LctParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw DomainError("LctParams: entries must be finite");
    if (b == 0.0) throw DomainError("LctParams: B = 0 is not supported");
    if (std::abs(a * d - b * c - 1.0) > 1e-12)
        throw DomainError("LctParams: determinant A D - B C must equal 1");
}

LctParams fourier_params() { return {0.0, 1.0, -1.0, 0.0}; }

LctParams params_from_ab_ratio(double ab_ratio) {
    LctParams m{ab_ratio, 1.0, ab_ratio - 1.0, 1.0};
    m.validate();
    return m;
}

Complex lct_kernel(const LctParams& m, Vec2 t, Vec2 xi) {
    m.validate();
    const double phase =
        m.chirp_in() * t.norm2() - m.inv_b() * t.dot(xi) + m.chirp_out() * xi.norm2();
    return std::polar(1.0 / (kTwoPi * m.b), phase);
}

namespace {

void require_positive_b(const LctParams& m) {
    if (!(m.b > 0.0))
        throw DomainError("lct: B > 0 required so the xi lattice has positive spacing");
}

}  // namespace

ComplexField2D lct_forward(const ComplexField2D& f, const LctParams& m) {
    m.validate();
    require_positive_b(m);
    require_chirp_bandwidth(f.spec, m.chirp_in());
    const ComplexField2D chirped = chirp_multiply(f, m.chirp_in(), +1);
    ComplexField2D U = centered_dft(chirped, -1);
    GridSpec xi_grid{U.spec.n1, U.spec.n2, m.b * U.spec.spacing};
    ComplexField2D out(xi_grid);
    const double amp = 1.0 / (kTwoPi * m.b);
    const double rate = m.chirp_out();
    for (int i = 0; i < xi_grid.n1; ++i) {
        const double x = xi_grid.coord1(i);
        for (int j = 0; j < xi_grid.n2; ++j) {
            const double y = xi_grid.coord2(j);
            out.at(i, j) =
                U.at(i, j) * std::polar(amp, rate * (x * x + y * y));
        }
    }
    return out;
}

ComplexField2D lct_inverse(const ComplexField2D& F, const LctParams& m) {
    m.validate();
    require_positive_b(m);
    GridSpec u_grid{F.spec.n1, F.spec.n2, F.spec.spacing / m.b};
    ComplexField2D U(u_grid);
    const double amp = kTwoPi * m.b;
    const double rate = -m.chirp_out();
    for (int i = 0; i < F.spec.n1; ++i) {
        const double x = F.spec.coord1(i);
        for (int j = 0; j < F.spec.n2; ++j) {
            const double y = F.spec.coord2(j);
            U.at(i, j) = F.at(i, j) * std::polar(amp, rate * (x * x + y * y));
        }
    }
    ComplexField2D chirped = centered_idft(U);
    return chirp_multiply(chirped, m.chirp_in(), -1);
}

ComplexField2D lc_convolution(const ComplexField2D& f, const ComplexField2D& g,
                              const LctParams& m) {
    m.validate();
    require_same_grid(f, g);
    const ComplexField2D chirped = chirp_multiply(f, m.chirp_in(), +1);
    const ComplexField2D conv = cyclic_convolve(chirped, g);
    return chirp_multiply(conv, m.chirp_in(), -1);
}

}  // namespace plcwt
