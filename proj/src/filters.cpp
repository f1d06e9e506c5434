#include "edmatch/filters.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string_view>

#include "edmatch/parallel.hpp"

namespace edmatch {

namespace {

// Mask given as '0'/'1' rows; weights are 1/(number of ones).
Kernel mask_kernel(int size, std::string_view mask) {
    Kernel k;
    k.size = size;
    k.weights.resize(static_cast<std::size_t>(size) * size, 0.0);
    int ones = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i] == '1') ++ones;
    }
    std::size_t j = 0;
    for (char c : mask) {
        if (c == '0') k.weights[j++] = 0.0;
        else if (c == '1') k.weights[j++] = 1.0 / ones;
    }
    return k;
}

const std::vector<Kernel>& full_bank() {
    static const std::vector<Kernel> bank = {
        mask_kernel(1, "1"),
        mask_kernel(3,
                    "010"
                    "111"
                    "010"),
        mask_kernel(3,
                    "111"
                    "111"
                    "111"),
        mask_kernel(5,
                    "00100"
                    "01110"
                    "11111"
                    "01110"
                    "00100"),
        mask_kernel(5,
                    "01110"
                    "11111"
                    "11111"
                    "11111"
                    "01110"),
        mask_kernel(5,
                    "11111"
                    "11111"
                    "11111"
                    "11111"
                    "11111"),
        mask_kernel(7,
                    "0001000"
                    "0011100"
                    "0111110"
                    "1111111"
                    "0111110"
                    "0011100"
                    "0001000"),
        mask_kernel(7,
                    "0011100"
                    "0111110"
                    "1111111"
                    "1111111"
                    "1111111"
                    "0111110"
                    "0011100"),
        mask_kernel(7,
                    "0111110"
                    "1111111"
                    "1111111"
                    "1111111"
                    "1111111"
                    "1111111"
                    "0111110"),
        mask_kernel(7,
                    "1111111"
                    "1111111"
                    "1111111"
                    "1111111"
                    "1111111"
                    "1111111"
                    "1111111"),
    };
    return bank;
}

// Mirror reflection that does not repeat the edge sample; degenerates to
// clamping on single-sample axes.
inline int reflect(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * (n - 1) - i;
    }
    return i;
}

}  // namespace

void FilterBank::validate() const {
    if (kernels.empty()) {
        throw std::invalid_argument("FilterBank: bank is empty");
    }
    const Kernel& first = kernels.front();
    if (first.size != 1 || first.weights.size() != 1 || first.weights[0] != 1.0) {
        throw std::invalid_argument("FilterBank: kernel 0 must be the 1x1 identity");
    }
    for (const Kernel& k : kernels) {
        if (k.size < 1 || k.size % 2 == 0 || k.size > 7) {
            throw std::invalid_argument("FilterBank: kernel side must be odd and at most 7");
        }
        if (k.weights.size() != static_cast<std::size_t>(k.size) * k.size) {
            throw std::invalid_argument("FilterBank: kernel weight count does not match size");
        }
        double sum = 0.0;
        for (double w : k.weights) sum += w;
        if (std::abs(sum - 1.0) > 1e-6) {
            throw std::invalid_argument("FilterBank: kernel weights must sum to 1");
        }
    }
}

FilterBank default_bank(int k) {
    if (k < 1 || k > 10) {
        throw std::invalid_argument("default_bank: filter count must be in [1,10]");
    }
    FilterBank bank;
    bank.kernels.assign(full_bank().begin(), full_bank().begin() + k);
    return bank;
}

ResponseStack apply(const FilterBank& bank, const FeatureMap& f) {
    bank.validate();
    const int kcount = bank.count();
    const int c = f.channels();
    const int h = f.height();
    const int w = f.width();
    ResponseStack stack;
    stack.filters = kcount;
    stack.channels = c;
    stack.height = h;
    stack.width = w;
    stack.data.resize(static_cast<std::size_t>(kcount) * c * h * w);

    parallel_for(kcount * c, [&](int job) {
        const int ki = job / c;
        const int ci = job % c;
        const Kernel& kernel = bank.kernels[ki];
        const float* src = f.channel(ci);
        float* dst = stack.plane(ki, ci);
        if (kernel.size == 1) {
            std::memcpy(dst, src, sizeof(float) * h * w);
            return;
        }
        const int r = kernel.size / 2;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int dy = -r; dy <= r; ++dy) {
                    const int yy = reflect(y + dy, h);
                    const double* wrow = kernel.weights.data() +
                                         static_cast<std::size_t>(dy + r) * kernel.size;
                    for (int dx = -r; dx <= r; ++dx) {
                        const double wt = wrow[dx + r];
                        if (wt == 0.0) continue;
                        acc += wt * src[yy * w + reflect(x + dx, w)];
                    }
                }
                dst[y * w + x] = static_cast<float>(acc);
            }
        }
    });
    return stack;
}

}  // namespace edmatch
