#include "edmatch/edm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edmatch/ehs.hpp"
#include "edmatch/gaussian.hpp"

namespace edmatch {

FeatureMap edm(const FeatureMap& content, const FeatureMap& style,
               const EdmConfig& cfg, FeatureMap* step1) {
    if (content.channels() != style.channels()) {
        throw std::invalid_argument("edm: channel counts differ");
    }
    const FilterBank bank = default_bank(cfg.filter_count);
    FeatureMap matched = match_channelwise(content, style, bank);
    if (step1) *step1 = matched;
    auto [white, kernels] = whiten(matched, cfg.eig_epsilon);
    FeatureMap stylized = color(white, style, cfg.eig_epsilon);
    const double alpha = std::clamp(cfg.alpha, 0.0, 1.0);
    if (alpha == 1.0) return stylized;
    return strength(content, stylized, alpha);
}

FeatureMap strength(const FeatureMap& content, const FeatureMap& stylized,
                    double alpha) {
    if (!content.same_shape(stylized)) {
        throw std::invalid_argument("strength: shapes differ");
    }
    alpha = std::clamp(alpha, 0.0, 1.0);
    if (alpha == 0.0) return content;
    if (alpha == 1.0) return stylized;
    FeatureMap out(content.channels(), content.height(), content.width());
    const std::size_t total = content.size();
    for (std::size_t i = 0; i < total; ++i) {
        out.data()[i] = static_cast<float>(alpha * stylized.data()[i] +
                                           (1.0 - alpha) * content.data()[i]);
    }
    return out;
}

FeatureMap interpolate(const FeatureMap& content,
                       const std::vector<FeatureMap>& styles,
                       const std::vector<double>& weights,
                       const EdmConfig& cfg) {
    if (styles.empty()) throw std::invalid_argument("interpolate: no styles given");
    if (styles.size() != weights.size()) {
        throw std::invalid_argument("interpolate: weight count does not match style count");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("interpolate: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        throw std::invalid_argument("interpolate: weights must sum to 1");
    }

    std::vector<std::size_t> active;
    for (std::size_t s = 0; s < styles.size(); ++s) {
        if (weights[s] > 0.0) active.push_back(s);
    }
    // A single active weight is 1 within tolerance; return its edm output
    // bit-exactly instead of round-tripping through the blend.
    if (active.size() == 1) return edm(content, styles[active[0]], cfg);

    std::vector<double> acc(content.size(), 0.0);
    for (std::size_t s : active) {
        FeatureMap part = edm(content, styles[s], cfg);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += weights[s] * part.data()[i];
    }
    FeatureMap out(content.channels(), content.height(), content.width());
    for (std::size_t i = 0; i < acc.size(); ++i) out.data()[i] = static_cast<float>(acc[i]);
    return out;
}

}  // namespace edmatch
