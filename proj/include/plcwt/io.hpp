#pragma once

#include <string>

#include <json.hpp>

#include "plcwt/edge.hpp"
#include "plcwt/plcwt.hpp"

namespace plcwt {

/// Binary PGM (P5, maxval 255) decoded to a [0, 1] field on a unit-spaced
/// centered grid. FormatError on bad magic/dimensions/truncation, IoError
/// on unreadable files.
RealField2D load_image(const std::string& path);

/// Linear [0, 1] -> [0, 255] quantization, round-half-up.
void save_image(const RealField2D& f, const std::string& path);

/// Binary mask as a {0, 255} P5 image.
void save_mask(const std::vector<std::uint8_t>& mask, const GridSpec& spec,
               const std::string& path);

nlohmann::json wavelet_to_json(const WaveletSpec& w);
WaveletSpec wavelet_from_json(const nlohmann::json& j);

nlohmann::json lct_to_json(const LctParams& m);
LctParams lct_from_json(const nlohmann::json& j);

nlohmann::json scale_grid_to_json(const ScaleAngleGrid& g);
ScaleAngleGrid scale_grid_from_json(const nlohmann::json& j);

nlohmann::json edge_config_to_json(const EdgeConfig& cfg);
EdgeConfig edge_config_from_json(const nlohmann::json& j);

/// Rejects keys outside the allowed set (strict config parsing).
void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed);

/// Volume container: "PLCW" magic, little-endian uint32 JSON-header length,
/// JSON header (grid, params, wavelet, shapes), then one raw little-endian
/// interleaved complex64 (2 x float32) payload per plane.
void save_volume(const CoefficientVolume& v, const std::string& path);
CoefficientVolume load_volume(const std::string& path);

}  // namespace plcwt
