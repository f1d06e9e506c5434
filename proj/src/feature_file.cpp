#include "edmatch/feature_file.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace edmatch {

namespace {

constexpr char kMagic[4] = {'E', 'D', 'M', 'F'};
constexpr std::uint32_t kVersion = 1;

std::uint32_t read_u32_le(std::istream& in, const char* field) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) {
        throw std::runtime_error(std::string("feature file: truncated ") + field);
    }
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

}  // namespace

FeatureMap read_feature_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("feature file: cannot open " + path);

    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
        throw std::runtime_error("feature file: bad magic (expected EDMF): " + path);
    }
    const std::uint32_t version = read_u32_le(in, "version");
    if (version != kVersion) {
        throw std::runtime_error("feature file: unsupported version " +
                                 std::to_string(version));
    }
    const std::uint32_t c = read_u32_le(in, "channel count");
    const std::uint32_t h = read_u32_le(in, "height");
    const std::uint32_t w = read_u32_le(in, "width");
    if (c == 0 || h == 0 || w == 0) {
        throw std::runtime_error("feature file: zero dimension in header");
    }
    const std::uint64_t count = static_cast<std::uint64_t>(c) * h * w;
    const std::uint64_t expected_bytes = count * 4;

    std::vector<float> data(count);
    if (!in.read(reinterpret_cast<char*>(data.data()),
                 static_cast<std::streamsize>(expected_bytes))) {
        throw std::runtime_error(
            "feature file: payload length shorter than declared c*h*w*4 = " +
            std::to_string(expected_bytes) + " bytes");
    }
    char extra;
    if (in.read(&extra, 1)) {
        throw std::runtime_error("feature file: payload length exceeds declared c*h*w*4");
    }
    if constexpr (std::endian::native == std::endian::big) {
        for (float& v : data) {
            std::uint32_t u;
            std::memcpy(&u, &v, 4);
            u = __builtin_bswap32(u);
            std::memcpy(&v, &u, 4);
        }
    }
    return FeatureMap(static_cast<int>(c), static_cast<int>(h), static_cast<int>(w),
                      std::move(data));
}

void write_feature_file(const std::string& path, const FeatureMap& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("feature file: cannot open for writing " + path);
    out.write(kMagic, 4);
    write_u32_le(out, kVersion);
    write_u32_le(out, static_cast<std::uint32_t>(f.channels()));
    write_u32_le(out, static_cast<std::uint32_t>(f.height()));
    write_u32_le(out, static_cast<std::uint32_t>(f.width()));
    if constexpr (std::endian::native == std::endian::big) {
        for (float v : f.data()) {
            std::uint32_t u;
            std::memcpy(&u, &v, 4);
            u = __builtin_bswap32(u);
            out.write(reinterpret_cast<const char*>(&u), 4);
        }
    } else {
        out.write(reinterpret_cast<const char*>(f.data().data()),
                  static_cast<std::streamsize>(f.data().size() * 4));
    }
    out.flush();
    if (!out) throw std::runtime_error("feature file: write failed for " + path);
}

}  // namespace edmatch
