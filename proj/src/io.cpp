#include "plcwt/io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <set>

namespace plcwt {

namespace {

int pgm_token(std::istream& in) {
    // skips whitespace and '#' comments, then reads one decimal integer
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF || !std::isdigit(c)) throw FormatError("PGM: malformed header");
    int v = 0;
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + (c - '0');
        if (v > 1 << 20) throw FormatError("PGM: header value out of range");
        c = in.get();
    }
    return v;
}

void write_le_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_le_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw FormatError("volume: truncated header length");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

nlohmann::json grid_spec_to_json(const GridSpec& g) {
    return {{"n1", g.n1}, {"n2", g.n2}, {"spacing", g.spacing}};
}

GridSpec grid_spec_from_json(const nlohmann::json& j) {
    require_keys(j, {"n1", "n2", "spacing"});
    GridSpec g{j.at("n1").get<int>(), j.at("n2").get<int>(), j.at("spacing").get<double>()};
    g.validate();
    return g;
}

}  // namespace

RealField2D load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open image: " + path);
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
        throw FormatError("PGM: expected P5 magic in " + path);
    const int width = pgm_token(in);
    const int height = pgm_token(in);
    const int maxval = pgm_token(in);
    if (maxval != 255) throw FormatError("PGM: only maxval 255 is supported");
    if (width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0)
        throw FormatError("PGM: dimensions must be even and >= 2");
    // exactly one whitespace byte separates the header from the raster
    std::vector<unsigned char> raw(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        throw FormatError("PGM: truncated raster in " + path);

    RealField2D f(GridSpec{height, width, 1.0});
    for (std::size_t i = 0; i < raw.size(); ++i) f.values[i] = raw[i] / 255.0;
    return f;
}

void save_image(const RealField2D& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write image: " + path);
    out << "P5\n" << f.spec.n2 << " " << f.spec.n1 << "\n255\n";
    std::vector<unsigned char> raw(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double v = std::clamp(f.values[i], 0.0, 1.0);
        raw[i] = static_cast<unsigned char>(std::floor(v * 255.0 + 0.5));
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
    if (!out) throw IoError("short write: " + path);
}

void save_mask(const std::vector<std::uint8_t>& mask, const GridSpec& spec,
               const std::string& path) {
    if (mask.size() != spec.size()) throw GridMismatch("save_mask: size mismatch");
    RealField2D f(spec);
    for (std::size_t i = 0; i < mask.size(); ++i) f.values[i] = mask[i] ? 1.0 : 0.0;
    save_image(f, path);
}

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw FormatError("config: expected a JSON object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : j.items())
        if (!ok.count(item.key())) throw FormatError("config: unknown key '" + item.key() + "'");
}

nlohmann::json wavelet_to_json(const WaveletSpec& w) {
    return {{"kind", "morlet2d"}, {"k0", {w.k0.x, w.k0.y}}, {"sigma", w.sigma}};
}

WaveletSpec wavelet_from_json(const nlohmann::json& j) {
    require_keys(j, {"kind", "k0", "sigma"});
    if (j.at("kind").get<std::string>() != "morlet2d")
        throw FormatError("wavelet: unknown kind");
    WaveletSpec w;
    const auto& k0 = j.at("k0");
    if (!k0.is_array() || k0.size() != 2) throw FormatError("wavelet: k0 must be [x, y]");
    w.k0 = {k0[0].get<double>(), k0[1].get<double>()};
    w.sigma = j.at("sigma").get<double>();
    w.validate();
    return w;
}

nlohmann::json lct_to_json(const LctParams& m) {
    return {{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

LctParams lct_from_json(const nlohmann::json& j) {
    require_keys(j, {"a", "b", "c", "d"});
    LctParams m{j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>(),
                j.at("d").get<double>()};
    m.validate();
    return m;
}

nlohmann::json scale_grid_to_json(const ScaleAngleGrid& g) {
    return {{"scales", g.scales},
            {"angles", g.angles},
            {"weights_a", g.weights_a},
            {"weights_theta", g.weights_theta}};
}

ScaleAngleGrid scale_grid_from_json(const nlohmann::json& j) {
    require_keys(j, {"scales", "angles", "weights_a", "weights_theta"});
    ScaleAngleGrid g;
    g.scales = j.at("scales").get<std::vector<double>>();
    g.angles = j.at("angles").get<std::vector<double>>();
    g.weights_a = j.at("weights_a").get<std::vector<double>>();
    g.weights_theta = j.at("weights_theta").get<std::vector<double>>();
    g.validate();
    return g;
}

nlohmann::json edge_config_to_json(const EdgeConfig& cfg) {
    return {{"ab_ratio", cfg.ab_ratio},
            {"scale_base", cfg.scale_base},
            {"n_scales", cfg.n_scales},
            {"angles", cfg.angles},
            {"window_n", cfg.window_n},
            {"fusion", cfg.fusion == FusionMethod::MaxAbs ? "max_abs" : "sum_abs"},
            {"threshold", cfg.threshold == ThresholdMethod::Otsu ? "otsu" : "fixed"},
            {"fixed_tau", cfg.fixed_tau},
            {"normalization",
             cfg.normalization == EdgeNormalization::PaperDiscrete ? "discrete" : "l2"},
            {"rotation_sign", cfg.rotation_sign},
            {"wavelet", wavelet_to_json(cfg.wavelet)}};
}

EdgeConfig edge_config_from_json(const nlohmann::json& j) {
    require_keys(j, {"ab_ratio", "scale_base", "n_scales", "angles", "window_n", "fusion",
                     "threshold", "fixed_tau", "normalization", "rotation_sign", "wavelet"});
    EdgeConfig cfg;
    if (j.contains("ab_ratio")) cfg.ab_ratio = j.at("ab_ratio").get<double>();
    if (j.contains("scale_base")) cfg.scale_base = j.at("scale_base").get<double>();
    if (j.contains("n_scales")) cfg.n_scales = j.at("n_scales").get<int>();
    if (j.contains("angles")) cfg.angles = j.at("angles").get<std::vector<double>>();
    if (j.contains("window_n")) cfg.window_n = j.at("window_n").get<int>();
    if (j.contains("fusion")) {
        const std::string s = j.at("fusion").get<std::string>();
        if (s == "max_abs") cfg.fusion = FusionMethod::MaxAbs;
        else if (s == "sum_abs") cfg.fusion = FusionMethod::SumAbs;
        else throw FormatError("edge config: unknown fusion '" + s + "'");
    }
    if (j.contains("threshold")) {
        const std::string s = j.at("threshold").get<std::string>();
        if (s == "otsu") cfg.threshold = ThresholdMethod::Otsu;
        else if (s == "fixed") cfg.threshold = ThresholdMethod::Fixed;
        else throw FormatError("edge config: unknown threshold '" + s + "'");
    }
    if (j.contains("fixed_tau")) cfg.fixed_tau = j.at("fixed_tau").get<double>();
    if (j.contains("normalization")) {
        const std::string s = j.at("normalization").get<std::string>();
        if (s == "discrete") cfg.normalization = EdgeNormalization::PaperDiscrete;
        else if (s == "l2") cfg.normalization = EdgeNormalization::L2;
        else throw FormatError("edge config: unknown normalization '" + s + "'");
    }
    if (j.contains("rotation_sign")) cfg.rotation_sign = j.at("rotation_sign").get<int>();
    if (j.contains("wavelet")) cfg.wavelet = wavelet_from_json(j.at("wavelet"));
    cfg.validate();
    return cfg;
}

void save_volume(const CoefficientVolume& v, const std::string& path) {
    v.validate();
    nlohmann::json header = {{"grid", scale_grid_to_json(v.grid)},
                             {"spatial", grid_spec_to_json(v.spatial)},
                             {"plane", grid_spec_to_json(v.planes.front().spec)},
                             {"params", lct_to_json(v.params)},
                             {"wavelet", wavelet_to_json(v.wavelet)},
                             {"planes", v.planes.size()}};
    const std::string hs = header.dump();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write volume: " + path);
    out.write("PLCW", 4);
    write_le_u32(out, static_cast<std::uint32_t>(hs.size()));
    out.write(hs.data(), static_cast<std::streamsize>(hs.size()));
    std::vector<float> buf;
    for (const ComplexField2D& p : v.planes) {
        buf.resize(p.values.size() * 2);
        for (std::size_t i = 0; i < p.values.size(); ++i) {
            buf[2 * i] = static_cast<float>(p.values[i].real());
            buf[2 * i + 1] = static_cast<float>(p.values[i].imag());
        }
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size() * sizeof(float)));
    }
    if (!out) throw IoError("short write: " + path);
}

CoefficientVolume load_volume(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open volume: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "PLCW", 4) != 0)
        throw FormatError("volume: bad magic in " + path);
    const std::uint32_t hlen = read_le_u32(in);
    std::string hs(hlen, '\0');
    in.read(hs.data(), hlen);
    if (!in) throw FormatError("volume: truncated header");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(hs);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("volume: header parse failure: ") + e.what());
    }
    require_keys(header, {"grid", "spatial", "plane", "params", "wavelet", "planes"});

    CoefficientVolume v;
    v.grid = scale_grid_from_json(header.at("grid"));
    v.spatial = grid_spec_from_json(header.at("spatial"));
    const GridSpec plane = grid_spec_from_json(header.at("plane"));
    v.params = lct_from_json(header.at("params"));
    v.wavelet = wavelet_from_json(header.at("wavelet"));
    const std::size_t n = header.at("planes").get<std::size_t>();
    if (n != v.grid.plane_count()) throw FormatError("volume: plane count mismatch");

    std::vector<float> buf(plane.size() * 2);
    v.planes.reserve(n);
    for (std::size_t pi = 0; pi < n; ++pi) {
        in.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(buf.size() * sizeof(float)));
        if (static_cast<std::size_t>(in.gcount()) != buf.size() * sizeof(float))
            throw FormatError("volume: truncated plane payload");
        ComplexField2D p(plane);
        for (std::size_t i = 0; i < p.values.size(); ++i)
            p.values[i] = Complex{buf[2 * i], buf[2 * i + 1]};
        v.planes.push_back(std::move(p));
    }
    v.validate();
    return v;
}

}  // namespace plcwt
