#pragma once

#include "edmatch/core.hpp"

namespace edmatch {

/// sRGB (0..255 per channel, D65) to CIE Lab. Input must have 3 channels
/// ordered R, G, B; output channels are L, a, b.
FeatureMap rgb_to_lab(const FeatureMap& rgb);

/// Inverse of rgb_to_lab. Output is in 0..255 but not clamped; callers
/// quantizing to 8 bits clamp afterwards.
FeatureMap lab_to_rgb(const FeatureMap& lab);

}  // namespace edmatch
