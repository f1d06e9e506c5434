#pragma once

#include <string>

#include "edmatch/core.hpp"

namespace edmatch {

// Binary feature-map file: magic "EDMF", u32 version (1), u32 c/h/w,
// then c*h*w little-endian float32, channel-major row-major. Round-trips
// bit-exactly.

FeatureMap read_feature_file(const std::string& path);

void write_feature_file(const std::string& path, const FeatureMap& f);

}  // namespace edmatch
