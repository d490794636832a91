#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "plcwt/io.hpp"

using namespace plcwt;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("plcwt_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("image round trip and quantization") {
    TempDir tmp;
    RealField2D img(GridSpec{4, 6, 1.0});
    for (std::size_t i = 0; i < img.values.size(); ++i)
        img.values[i] = static_cast<double>(i) / (img.values.size() - 1);
    const std::string path = tmp.file("a.pgm");
    save_image(img, path);
    const RealField2D back = load_image(path);
    CHECK(back.spec.n1 == 4);
    CHECK(back.spec.n2 == 6);
    for (std::size_t i = 0; i < img.values.size(); ++i) {
        // round-half-up quantization to 255 levels, then /255 on load
        const double q = std::floor(img.values[i] * 255.0 + 0.5) / 255.0;
        CHECK(back.values[i] == doctest::Approx(q).epsilon(1e-12));
    }

    // half-way values round up
    RealField2D gray(GridSpec{2, 2, 1.0});
    for (double& v : gray.values) v = 0.5 / 255.0;
    save_image(gray, path);
    CHECK(load_image(path).values[0] == doctest::Approx(1.0 / 255.0));

    // out-of-range values are clamped
    gray.values[0] = 1.7;
    gray.values[1] = -0.3;
    save_image(gray, path);
    const RealField2D clamped = load_image(path);
    CHECK(clamped.values[0] == doctest::Approx(1.0));
    CHECK(clamped.values[1] == doctest::Approx(0.0));
}

TEST_CASE("image format errors") {
    TempDir tmp;
    CHECK_THROWS_AS(load_image(tmp.file("missing.pgm")), IoError);

    const std::string bad = tmp.file("bad.pgm");
    {
        std::ofstream out(bad, std::ios::binary);
        out << "P6\n2 2\n255\n....";
    }
    CHECK_THROWS_AS(load_image(bad), FormatError);
    {
        std::ofstream out(bad, std::ios::binary);
        out << "P5\n# comment\n2 2\n65535\n";
        out.write("\0\0\0\0\0\0\0\0", 8);
    }
    CHECK_THROWS_AS(load_image(bad), FormatError);
    {
        std::ofstream out(bad, std::ios::binary);
        out << "P5\n4 4\n255\n";
        out.write("\0\0\0", 3);  // truncated raster
    }
    CHECK_THROWS_AS(load_image(bad), FormatError);
    {
        std::ofstream out(bad, std::ios::binary);
        out << "P5\n3 4\n255\n";
        for (int i = 0; i < 12; ++i) out.put('\0');
    }
    CHECK_THROWS_AS(load_image(bad), FormatError);  // odd width
}

TEST_CASE("comments and whitespace in the header are tolerated") {
    TempDir tmp;
    const std::string path = tmp.file("c.pgm");
    {
        std::ofstream out(path, std::ios::binary);
        out << "P5\n# generated\n 4 # w\n4\n255\n";
        for (int i = 0; i < 16; ++i) out.put(static_cast<char>(i * 16));
    }
    const RealField2D img = load_image(path);
    CHECK(img.spec.n1 == 4);
    CHECK(img.values[1] == doctest::Approx(16.0 / 255.0));
}

TEST_CASE("mask export uses full-range pixels") {
    TempDir tmp;
    const GridSpec g{2, 2, 1.0};
    const std::string path = tmp.file("m.pgm");
    save_mask({1, 0, 0, 1}, g, path);
    const RealField2D img = load_image(path);
    CHECK(img.values[0] == 1.0);
    CHECK(img.values[1] == 0.0);
    CHECK_THROWS_AS(save_mask({1, 0}, g, path), GridMismatch);
}

TEST_CASE("volume container round trip") {
    TempDir tmp;
    const GridSpec g{8, 8, 0.5};
    const ComplexField2D f = testutil::random_field(g, 201);
    WaveletSpec w;
    w.k0 = {5.5, 0.5};
    w.sigma = 0.9;
    const LctParams m = params_from_ab_ratio(0.05);
    const ScaleAngleGrid grid = log_scale_grid(0.8, 1.6, 2, 3);
    const CoefficientVolume v = plcwt_forward(f, w, m, grid);

    const std::string path = tmp.file("v.plcwt");
    save_volume(v, path);
    const CoefficientVolume back = load_volume(path);
    CHECK(back.grid.scales == v.grid.scales);
    CHECK(back.grid.angles == v.grid.angles);
    CHECK(back.spatial == v.spatial);
    CHECK(back.params == v.params);
    CHECK(back.wavelet.k0.x == v.wavelet.k0.x);
    CHECK(back.wavelet.sigma == v.wavelet.sigma);
    REQUIRE(back.planes.size() == v.planes.size());
    for (std::size_t p = 0; p < v.planes.size(); ++p)
        CHECK(relative_l2_error(back.planes[p], v.planes[p]) < 1e-6);  // float payload
}

TEST_CASE("volume format errors") {
    TempDir tmp;
    CHECK_THROWS_AS(load_volume(tmp.file("missing.plcwt")), IoError);
    const std::string bad = tmp.file("bad.plcwt");
    {
        std::ofstream out(bad, std::ios::binary);
        out << "NOPE";
    }
    CHECK_THROWS_AS(load_volume(bad), FormatError);
    {
        std::ofstream out(bad, std::ios::binary);
        out << "PLCW";
        out.put(char(50));
        out.put(char(0));
        out.put(char(0));
        out.put(char(0));
        out << "{\"not json";
    }
    CHECK_THROWS_AS(load_volume(bad), FormatError);
}

TEST_CASE("config serialization is a strict idempotent round trip") {
    EdgeConfig cfg;
    cfg.ab_ratio = 0.02;
    cfg.fusion = FusionMethod::SumAbs;
    cfg.threshold = ThresholdMethod::Fixed;
    cfg.fixed_tau = 0.3;
    cfg.normalization = EdgeNormalization::L2;
    cfg.rotation_sign = 1;
    const nlohmann::json j = edge_config_to_json(cfg);
    const EdgeConfig back = edge_config_from_json(j);
    CHECK(edge_config_to_json(back) == j);

    nlohmann::json junk = j;
    junk["mystery"] = 1;
    CHECK_THROWS_AS(edge_config_from_json(junk), FormatError);

    nlohmann::json badw = wavelet_to_json(cfg.wavelet);
    badw["kind"] = "haar";
    CHECK_THROWS_AS(wavelet_from_json(badw), FormatError);

    const LctParams m = params_from_ab_ratio(0.1);
    CHECK(lct_from_json(lct_to_json(m)) == m);
    nlohmann::json badm = lct_to_json(m);
    badm["b"] = 0.0;
    CHECK_THROWS_AS(lct_from_json(badm), DomainError);

    const ScaleAngleGrid grid = log_scale_grid(0.5, 4.0, 3, 4);
    const ScaleAngleGrid gback = scale_grid_from_json(scale_grid_to_json(grid));
    CHECK(gback.scales == grid.scales);
    CHECK(gback.weights_a == grid.weights_a);
}
