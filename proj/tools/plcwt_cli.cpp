#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plcwt/io.hpp"
#include "plcwt/theorems.hpp"

using nlohmann::json;

namespace {

struct MatrixFlags {
    double ab = 0.0;
    std::string matrix;

    plcwt::LctParams resolve() const {
        if (!matrix.empty()) {
            std::istringstream ss(matrix);
            double v[4];
            char comma;
            for (int i = 0; i < 4; ++i) {
                if (i > 0 && !(ss >> comma && comma == ','))
                    throw plcwt::ConfigError("--matrix expects A,B,C,D");
                if (!(ss >> v[i])) throw plcwt::ConfigError("--matrix expects A,B,C,D");
            }
            plcwt::LctParams m{v[0], v[1], v[2], v[3]};
            m.validate();
            return m;
        }
        return plcwt::params_from_ab_ratio(ab);
    }
};

struct WaveletFlags {
    std::string k0 = "6,0";
    double sigma = 1.0;

    plcwt::WaveletSpec resolve() const {
        plcwt::WaveletSpec w;
        std::istringstream ss(k0);
        char comma;
        if (!(ss >> w.k0.x >> comma >> w.k0.y) || comma != ',')
            throw plcwt::ConfigError("--wavelet-k0 expects x,y");
        w.sigma = sigma;
        w.validate();
        return w;
    }
};

void add_matrix_flags(CLI::App* app, MatrixFlags& mf) {
    app->add_option("--ab", mf.ab, "A/B chirp ratio; completes to (A,1;A-1,1)");
    app->add_option("--matrix", mf.matrix, "full parameter matrix A,B,C,D");
}

void add_wavelet_flags(CLI::App* app, WaveletFlags& wf) {
    app->add_option("--wavelet-k0", wf.k0, "carrier frequency x,y (|k0| >= 5)");
    app->add_option("--wavelet-sigma", wf.sigma, "Gaussian envelope width");
}

void write_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw plcwt::IoError("cannot write " + path);
    out << j.dump(2) << "\n";
}

plcwt::ComplexField2D to_complex(const plcwt::RealField2D& f) {
    plcwt::ComplexField2D out(f.spec);
    for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i];
    return out;
}

int run_transform(const std::string& in, const std::string& out, const MatrixFlags& mf,
                  const WaveletFlags& wf, double base, int n_scales, int n_angles,
                  const std::string& sidecar) {
    const plcwt::RealField2D img = plcwt::load_image(in);
    const plcwt::LctParams m = mf.resolve();
    const plcwt::WaveletSpec w = wf.resolve();
    if (n_scales < 2) throw plcwt::ConfigError("--scales must be >= 2");
    const plcwt::ScaleAngleGrid grid =
        plcwt::log_scale_grid(base, std::pow(base, n_scales), n_scales, n_angles);
    const plcwt::CoefficientVolume v = plcwt::plcwt_forward(to_complex(img), w, m, grid);
    plcwt::save_volume(v, out);

    json j = {{"input", in},
              {"output", out},
              {"params", plcwt::lct_to_json(m)},
              {"wavelet", plcwt::wavelet_to_json(w)},
              {"grid", plcwt::scale_grid_to_json(grid)}};
    write_json(sidecar, j);
    std::cout << "wrote " << out << " (" << v.planes.size() << " planes)\n";
    return 0;
}

int run_reconstruct(const std::string& in, const std::string& out, const std::string& ref,
                    const std::string& sidecar) {
    const plcwt::CoefficientVolume v = plcwt::load_volume(in);
    const plcwt::AdmissibilityConstant c =
        plcwt::admissibility(v.wavelet, v.params, {}, v.wavelet.k0);
    const plcwt::ComplexField2D rec = plcwt::plcwt_inverse(v, c);
    plcwt::RealField2D img(rec.spec);
    for (std::size_t i = 0; i < rec.values.size(); ++i) img.values[i] = rec.values[i].real();
    plcwt::save_image(img, out);

    json j = {{"input", in},
              {"output", out},
              {"admissibility", c.value},
              {"quadrature", c.quadrature}};
    if (!ref.empty()) {
        const plcwt::RealField2D orig = plcwt::load_image(ref);
        j["relative_l2_error"] = plcwt::relative_l2_error(rec, to_complex(orig));
    }
    write_json(sidecar, j);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_edge(const std::string& in, const std::string& prefix, plcwt::EdgeConfig cfg,
             const std::string& sidecar) {
    const plcwt::RealField2D img = plcwt::load_image(in);
    const plcwt::EdgeMap map = plcwt::edge_detect(img, cfg);
    plcwt::save_image(map.magnitude, prefix + "_magnitude.pgm");
    plcwt::save_mask(map.binary, map.magnitude.spec, prefix + "_binary.pgm");

    json j = {{"input", in},
              {"threshold", map.threshold_value},
              {"degenerate_histogram", map.degenerate_histogram},
              {"config", plcwt::edge_config_to_json(cfg)}};
    write_json(sidecar.empty() ? prefix + ".json" : sidecar, j);
    std::cout << "wrote " << prefix << "_magnitude.pgm, " << prefix
              << "_binary.pgm (tau = " << map.threshold_value << ")\n";
    return 0;
}

int run_admissibility(const MatrixFlags& mf, const WaveletFlags& wf,
                      const std::string& sidecar) {
    const plcwt::LctParams m = mf.resolve();
    const plcwt::WaveletSpec w = wf.resolve();
    const plcwt::AdmissibilityConstant c = plcwt::admissibility(w, m, {}, w.k0);
    json j = {{"value", c.value},
              {"quadrature", c.quadrature},
              {"relative_error_estimate", c.relative_error_estimate},
              {"params", plcwt::lct_to_json(m)},
              {"wavelet", plcwt::wavelet_to_json(w)}};
    std::cout << j.dump(2) << "\n";
    write_json(sidecar, j);
    return 0;
}

int run_verify(int n, const std::string& sidecar) {
    if (n < 8 || n % 2 != 0) throw plcwt::ConfigError("--size must be even and >= 8");
    const plcwt::GridSpec g{n, n, 0.5};
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    plcwt::ComplexField2D f(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const plcwt::Vec2 t = g.coord(i, j);
            f.at(i, j) = plcwt::Complex{gauss(rng), gauss(rng)} *
                         std::exp(-t.norm2() / (0.15 * n));
        }

    json checks = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, double err, double tol) {
        const bool pass = err <= tol;
        ok = ok && pass;
        checks.push_back({{"check", name}, {"error", err}, {"tolerance", tol}, {"pass", pass}});
        std::cout << (pass ? "pass" : "FAIL") << "  " << name << "  error " << err << "\n";
    };

    const plcwt::LctParams m = plcwt::params_from_ab_ratio(0.05);
    const plcwt::ComplexField2D rt = plcwt::lct_inverse(plcwt::lct_forward(f, m), m);
    record("lct round trip", plcwt::relative_l2_error(rt, f), 1e-8);

    plcwt::WaveletSpec w;
    const plcwt::ScaleAngleGrid grid = plcwt::log_scale_grid(1.0, 2.0, 2, 4);
    const plcwt::CoefficientVolume v = plcwt::plcwt_forward(f, w, m, grid);
    double worst = 0.0;
    for (std::size_t si = 0; si < grid.scales.size(); ++si)
        for (std::size_t ai = 0; ai < grid.angles.size(); ++ai) {
            const plcwt::Vec2 b = g.coord(n / 2 + 1, n / 2 - 1);
            const plcwt::Complex direct =
                plcwt::plcwt_direct(f, w, m, b, grid.scales[si], grid.angles[ai]);
            const plcwt::Complex fast =
                v.plane(si, ai).at(g.index1(b.x), g.index2(b.y));
            worst = std::max(worst, std::abs(fast - direct) /
                                        std::max(1e-300, std::abs(direct)));
        }
    record("fast path vs direct sum", worst, 1e-6);

    const plcwt::CoefficientVolume pwt = plcwt::pwt_forward(f, w, grid);
    const plcwt::CoefficientVolume fwd =
        plcwt::plcwt_forward(f, w, plcwt::fourier_params(), grid);
    double red = 0.0;
    for (std::size_t pi = 0; pi < pwt.planes.size(); ++pi)
        red = std::max(red, plcwt::relative_l2_error(fwd.planes[pi], pwt.planes[pi]));
    record("Fourier-matrix reduction", red, 1e-12);

    const plcwt::TheoremReport conv =
        plcwt::verify_convolution_theorem(f, f, w, w, m, grid);
    record("convolution theorem", conv.max_rel_error, 1e-6);
    const plcwt::TheoremReport corr =
        plcwt::verify_correlation_theorem(f, f, w, w, m, grid);
    record("correlation theorem", corr.max_rel_error, 1e-6);

    write_json(sidecar, {{"size", n}, {"checks", checks}, {"pass", ok}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D polar linear canonical wavelet transform toolkit"};
    app.require_subcommand(1);

    std::string in, out, ref, sidecar, prefix;
    MatrixFlags mf;
    WaveletFlags wf;
    double base = 1.5;
    int n_scales = 5, n_angles = 16, verify_size = 16;

    CLI::App* t = app.add_subcommand("transform", "analyze a PGM image into a .plcwt volume");
    t->add_option("--in", in, "input PGM (P5)")->required();
    t->add_option("--out", out, "output .plcwt volume")->required();
    add_matrix_flags(t, mf);
    add_wavelet_flags(t, wf);
    t->add_option("--base", base, "geometric scale base");
    t->add_option("--scales", n_scales, "number of scales");
    t->add_option("--angles", n_angles, "number of angles over [0, 2 pi)");
    t->add_option("--json", sidecar, "JSON sidecar path");

    CLI::App* r = app.add_subcommand("reconstruct", "invert a .plcwt volume back to an image");
    r->add_option("--in", in, "input .plcwt volume")->required();
    r->add_option("--out", out, "output PGM")->required();
    r->add_option("--ref", ref, "reference PGM for an error report");
    r->add_option("--json", sidecar, "JSON sidecar path");

    plcwt::EdgeConfig ecfg;
    int edge_angles = 8;
    std::string fusion = "max_abs", threshold = "otsu";
    CLI::App* e = app.add_subcommand("edge", "multiscale directional edge detection");
    e->add_option("--in", in, "input PGM")->required();
    e->add_option("--out", prefix, "output prefix")->required();
    e->add_option("--ab", ecfg.ab_ratio, "A/B chirp ratio");
    e->add_option("--base", ecfg.scale_base, "geometric scale base");
    e->add_option("--scales", ecfg.n_scales, "number of scales");
    e->add_option("--angles", edge_angles, "number of angles over [0, pi)");
    e->add_option("--fusion", fusion, "max_abs | sum_abs");
    e->add_option("--threshold", threshold, "otsu | fixed");
    e->add_option("--tau", ecfg.fixed_tau, "fixed threshold in [0, 1]");
    e->add_option("--wavelet-k0", wf.k0, "carrier frequency x,y");
    e->add_option("--wavelet-sigma", wf.sigma, "Gaussian envelope width");
    e->add_option("--json", sidecar, "JSON sidecar path (default: <prefix>.json)");

    CLI::App* a = app.add_subcommand("admissibility", "print the admissibility constant");
    add_matrix_flags(a, mf);
    add_wavelet_flags(a, wf);
    a->add_option("--json", sidecar, "JSON sidecar path");

    CLI::App* vc = app.add_subcommand("verify", "run the built-in invariant checks");
    vc->add_option("--size", verify_size, "grid size (even, >= 8)");
    vc->add_option("--json", sidecar, "JSON sidecar path");

    try {
        app.parse(argc, argv);
        if (t->parsed())
            return run_transform(in, out, mf, wf, base, n_scales, n_angles, sidecar);
        if (r->parsed()) return run_reconstruct(in, out, ref, sidecar);
        if (e->parsed()) {
            if (edge_angles < 1) throw plcwt::ConfigError("--angles must be >= 1");
            ecfg.angles.clear();
            for (int k = 0; k < edge_angles; ++k)
                ecfg.angles.push_back(plcwt::kPi * k / edge_angles);
            if (fusion == "max_abs") ecfg.fusion = plcwt::FusionMethod::MaxAbs;
            else if (fusion == "sum_abs") ecfg.fusion = plcwt::FusionMethod::SumAbs;
            else throw plcwt::ConfigError("--fusion must be max_abs or sum_abs");
            if (threshold == "otsu") ecfg.threshold = plcwt::ThresholdMethod::Otsu;
            else if (threshold == "fixed") ecfg.threshold = plcwt::ThresholdMethod::Fixed;
            else throw plcwt::ConfigError("--threshold must be otsu or fixed");
            // only override the edge defaults with flags the user passed
            if (e->count("--wavelet-k0") == 0)
                wf.k0 = std::to_string(ecfg.wavelet.k0.x) + "," +
                        std::to_string(ecfg.wavelet.k0.y);
            if (e->count("--wavelet-sigma") == 0) wf.sigma = ecfg.wavelet.sigma;
            ecfg.wavelet = wf.resolve();
            return run_edge(in, prefix, ecfg, sidecar);
        }
        if (a->parsed()) return run_admissibility(mf, wf, sidecar);
        if (vc->parsed()) return run_verify(verify_size, sidecar);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : 2;
    } catch (const plcwt::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const plcwt::FormatError& err) {
        std::cerr << "format error: " << err.what() << "\n";
        return 2;
    } catch (const plcwt::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
