#pragma once

#include <vector>

#include "plcwt/common.hpp"
#include "plcwt/errors.hpp"

namespace plcwt {

/// Uniform centered lattice: sample (i, j) sits at ((i - n1/2) d, (j - n2/2) d).
/// n1, n2 must be even so the origin is an exact lattice point.
struct GridSpec {
    int n1 = 0;
    int n2 = 0;
    double spacing = 1.0;

    void validate() const;

    std::size_t size() const { return static_cast<std::size_t>(n1) * n2; }
    double coord1(int i) const { return (i - n1 / 2) * spacing; }
    double coord2(int j) const { return (j - n2 / 2) * spacing; }
    Vec2 coord(int i, int j) const { return {coord1(i), coord2(j)}; }
    int index1(double c) const { return static_cast<int>(std::lround(c / spacing)) + n1 / 2; }
    int index2(double c) const { return static_cast<int>(std::lround(c / spacing)) + n2 / 2; }
    double extent1() const { return n1 * spacing; }
    double extent2() const { return n2 * spacing; }

    bool operator==(const GridSpec& o) const = default;
};

/// Complex samples of a function on a GridSpec, row-major in the first axis.
struct ComplexField2D {
    GridSpec spec;
    std::vector<Complex> values;

    ComplexField2D() = default;
    explicit ComplexField2D(const GridSpec& g) : spec(g), values(g.size()) { g.validate(); }

    Complex& at(int i, int j) { return values[static_cast<std::size_t>(i) * spec.n2 + j]; }
    const Complex& at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * spec.n2 + j];
    }

    /// sqrt(d^2 sum |v|^2): Riemann approximation of the L2 norm.
    double l2_norm() const;
    double max_abs() const;
    bool all_finite() const;
};

/// Real samples on a GridSpec; images and magnitude maps.
struct RealField2D {
    GridSpec spec;
    std::vector<double> values;

    RealField2D() = default;
    explicit RealField2D(const GridSpec& g) : spec(g), values(g.size()) { g.validate(); }

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * spec.n2 + j]; }
    const double& at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * spec.n2 + j];
    }
    double max_value() const;
    double min_value() const;
};

/// Builds a field by evaluating fn at every lattice coordinate.
ComplexField2D sample_field(const GridSpec& g, const std::function<Complex(Vec2)>& fn);

void require_same_grid(const ComplexField2D& a, const ComplexField2D& b);

/// out(t) = f(t) exp(j sign rate |t|^2); unimodular, magnitude-preserving.
ComplexField2D chirp_multiply(const ComplexField2D& f, double rate, int sign);

/// Largest chirp phase increment between adjacent samples for exp(j rate |t|^2).
double chirp_phase_step(const GridSpec& g, double rate);
void require_chirp_bandwidth(const GridSpec& g, double rate);

/// Angular-frequency lattice conjugate to g: spacing 2 pi / (n d). Square grids only.
GridSpec spectral_grid(const GridSpec& g);

/// G(u_m) = d^2 sum_k f(t_k) exp(sign j t_k . u_m) on the conjugate lattice.
/// sign = -1 is the forward transform; composing -1 then +1 and dividing by
/// (2 pi)^2 is an exact identity on these lattices.
ComplexField2D centered_dft(const ComplexField2D& f, int sign);

/// Inverse of centered_dft(., -1), including the (2 pi)^-2 factor.
ComplexField2D centered_idft(const ComplexField2D& F);

/// FFT realization of d^2 sum_k f(k) g(m - k) with periodic boundary, on the
/// centered lattice. Callers needing linear convolution zero-pad first.
ComplexField2D cyclic_convolve(const ComplexField2D& f, const ComplexField2D& g);

/// Zero-extends f to a factor-times larger centered grid with the same spacing.
ComplexField2D pad_zero(const ComplexField2D& f, int factor);

/// Extends f by replicating border samples out to a factor-times larger grid.
ComplexField2D pad_replicate(const ComplexField2D& f, int factor);

/// Extracts the centered target window; target must be compatible (same spacing).
ComplexField2D crop_center(const ComplexField2D& f, const GridSpec& target);

/// out(t) = f(-t) on the periodic centered lattice.
ComplexField2D reflect(const ComplexField2D& f);

double relative_l2_error(const ComplexField2D& approx, const ComplexField2D& ref);

/// max |a - b| / max(max|a|, max|b|); 0 when both vanish.
double max_relative_error(const ComplexField2D& a, const ComplexField2D& b);

}  // namespace plcwt
