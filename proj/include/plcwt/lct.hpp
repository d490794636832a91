#pragma once

#include "plcwt/grid.hpp"

namespace plcwt {

/// Parameter matrix M = (A, B; C, D) of the linear canonical transform,
/// with A D - B C = 1. The B = 0 branch is not representable here.
struct LctParams {
    double a = 0.0;
    double b = 1.0;
    double c = -1.0;
    double d = 0.0;

    void validate() const;

    double chirp_in() const { return a / (2.0 * b); }    // A / 2B
    double chirp_out() const { return d / (2.0 * b); }   // D / 2B
    double inv_b() const { return 1.0 / b; }

    bool operator==(const LctParams& o) const = default;
};

/// M = (0, 1; -1, 0): the transform degenerates to the (2 pi)^-1 Fourier
/// transform and every chirp rate vanishes.
LctParams fourier_params();

/// Completes (A, B) = (ab_ratio, 1) to a unimodular matrix with D = 1.
LctParams params_from_ab_ratio(double ab_ratio);

/// Kernel value (1/(2 pi B)) exp(j [ (A/2B)|t|^2 - t.xi/B + (D/2B)|xi|^2 ]).
Complex lct_kernel(const LctParams& m, Vec2 t, Vec2 xi);

/// F(xi) = integral of f(t) lct_kernel(m, t, xi) dt, realized as
/// chirp -> centered DFT -> chirp -> scale. Output lives on the lattice
/// xi = B u where u is the spectral lattice of f's grid; B > 0 required.
ComplexField2D lct_forward(const ComplexField2D& f, const LctParams& m);

/// Step-wise inverse of lct_forward; F must live on its xi lattice.
ComplexField2D lct_inverse(const ComplexField2D& F, const LctParams& m);

/// out(t) = e^{-j(A/2B)|t|^2} [ (f e^{j(A/2B)|.|^2}) * g ](t), cyclic.
ComplexField2D lc_convolution(const ComplexField2D& f, const ComplexField2D& g,
                              const LctParams& m);

}  // namespace plcwt
