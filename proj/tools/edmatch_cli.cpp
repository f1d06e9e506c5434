#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include "edmatch/color_space.hpp"
#include "edmatch/core.hpp"
#include "edmatch/edm.hpp"
#include "edmatch/ehs.hpp"
#include "edmatch/feature_file.hpp"
#include "edmatch/gaussian.hpp"
#include "edmatch/metrics.hpp"

namespace {

using edmatch::FeatureMap;

bool is_image_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return false;
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
    return ext == "png";
}

FeatureMap load_image(const std::string& path) {
    cv::Mat img = cv::imread(path, cv::IMREAD_COLOR);
    if (img.empty()) throw std::runtime_error("cannot decode image: " + path);
    FeatureMap f(3, img.rows, img.cols);
    for (int y = 0; y < img.rows; ++y) {
        const cv::Vec3b* row = img.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.cols; ++x) {
            f.at(0, y, x) = row[x][2];  // OpenCV stores BGR
            f.at(1, y, x) = row[x][1];
            f.at(2, y, x) = row[x][0];
        }
    }
    return f;
}

void save_image(const std::string& path, const FeatureMap& f) {
    if (f.channels() != 3) throw std::runtime_error("image output requires 3 channels");
    cv::Mat img(f.height(), f.width(), CV_8UC3);
    for (int y = 0; y < f.height(); ++y) {
        cv::Vec3b* row = img.ptr<cv::Vec3b>(y);
        for (int x = 0; x < f.width(); ++x) {
            for (int c = 0; c < 3; ++c) {
                const float v = std::round(f.at(c, y, x));
                row[x][2 - c] = static_cast<unsigned char>(std::clamp(v, 0.0f, 255.0f));
            }
        }
    }
    if (!cv::imwrite(path, img)) {
        throw std::runtime_error("cannot write image: " + path);
    }
}

FeatureMap load_any(const std::string& path, bool* is_image = nullptr) {
    const bool img = is_image_path(path);
    if (is_image) *is_image = img;
    return img ? load_image(path) : edmatch::read_feature_file(path);
}

struct Options {
    std::string method = "edm";
    int filters = 10;
    double alpha = 1.0;
    std::uint64_t seed = 0;
    std::string color_space = "lab";
    int bins = 256;
    int cmd_order = 5;
    int swd_mult = 4;
    std::string out;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->set_config("--config", "", "key=value config file (flags take precedence)");
    cmd->add_option("--filters", opt.filters, "number of neighborhood filters, 1..10")
        ->check(CLI::Range(1, 10));
    cmd->add_option("--alpha", opt.alpha, "style strength in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", opt.seed, "seed for the sliced projection directions");
    cmd->add_option("--color-space", opt.color_space, "rgb or lab (image inputs only)")
        ->check(CLI::IsMember({"rgb", "lab"}));
    cmd->add_option("--bins", opt.bins, "histogram bins")->check(CLI::PositiveNumber);
    cmd->add_option("--cmd-order", opt.cmd_order, "highest central moment order")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--swd-mult", opt.swd_mult, "sliced directions per channel")
        ->check(CLI::PositiveNumber);
}

FeatureMap run_method(const Options& opt, const FeatureMap& content,
                      const FeatureMap& style) {
    edmatch::EdmConfig cfg;
    cfg.filter_count = opt.filters;
    cfg.alpha = 1.0;
    FeatureMap stylized;
    if (opt.method == "edm") {
        stylized = edmatch::edm(content, style, cfg);
    } else if (opt.method == "ehs") {
        stylized = edmatch::match_channelwise(content, style,
                                              edmatch::default_bank(opt.filters));
    } else if (opt.method == "hs") {
        stylized = edmatch::match_channelwise(content, style, edmatch::default_bank(1));
    } else if (opt.method == "adain") {
        stylized = edmatch::adain(content, style);
    } else if (opt.method == "wct") {
        stylized = edmatch::wct(content, style);
    } else {
        throw std::runtime_error("unknown method: " + opt.method);
    }
    return edmatch::strength(content, stylized, opt.alpha);
}

int cmd_transfer(const Options& opt, const std::string& content_path,
                 const std::string& style_path) {
    if (opt.out.empty()) throw std::runtime_error("transfer requires --out");
    bool content_is_image = false;
    bool style_is_image = false;
    FeatureMap content = load_any(content_path, &content_is_image);
    FeatureMap style = load_any(style_path, &style_is_image);

    const bool use_lab = opt.color_space == "lab" && content_is_image && style_is_image;
    if (use_lab) {
        content = edmatch::rgb_to_lab(content);
        style = edmatch::rgb_to_lab(style);
    }
    FeatureMap result = run_method(opt, content, style);
    if (use_lab) result = edmatch::lab_to_rgb(result);

    if (content_is_image) {
        save_image(opt.out, result);
    } else {
        edmatch::write_feature_file(opt.out, result);
    }
    return 0;
}

int cmd_metrics(const Options& opt, const std::string& a_path,
                const std::string& b_path) {
    const FeatureMap a = load_any(a_path);
    const FeatureMap b = load_any(b_path);
    edmatch::SwdConfig swd_cfg;
    swd_cfg.seed = opt.seed;
    swd_cfg.directions = opt.swd_mult * a.channels();
    const edmatch::MetricReport r =
        edmatch::compute_report(a, b, swd_cfg, opt.bins, opt.cmd_order);

    nlohmann::json doc;
    if (r.content) {
        std::printf("content=%.9g\n", *r.content);
        doc["content"] = *r.content;
    }
    std::printf("gram=%.9g\n", r.gram);
    std::printf("mean_std=%.9g\n", r.mean_std);
    std::printf("histogram_l2=%.9g\n", r.histogram_l2);
    std::printf("cmd=%.9g\n", r.cmd);
    std::printf("swd=%.9g\n", r.swd);
    doc["gram"] = r.gram;
    doc["mean_std"] = r.mean_std;
    doc["histogram_l2"] = r.histogram_l2;
    doc["cmd"] = r.cmd;
    doc["swd"] = r.swd;
    doc["seed"] = opt.seed;
    doc["swd_directions"] = swd_cfg.directions;
    std::printf("%s\n", doc.dump().c_str());
    return 0;
}

int cmd_bench(const Options& opt, const std::string& input_path, int max_filters) {
    bool is_image = false;
    FeatureMap f = load_any(input_path, &is_image);
    if (opt.color_space == "lab" && is_image) f = edmatch::rgb_to_lab(f);
    const auto entries = edmatch::collision_bench(f, max_filters, 5);
    std::printf("k ratio time_ms\n");
    for (const auto& e : entries) {
        std::printf("%d %.6f %.3f\n", e.filters, e.ratio, e.time_ms);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distribution matching transforms for images and feature maps"};
    app.require_subcommand(1);
    Options opt;

    std::string content_path, style_path, a_path, b_path, bench_input;
    int max_filters = 10;

    CLI::App* transfer = app.add_subcommand("transfer", "match one map onto another");
    transfer->add_option("content", content_path, "content PNG or feature file")->required();
    transfer->add_option("style", style_path, "style PNG or feature file")->required();
    transfer->add_option("--out", opt.out, "output path")->required();
    transfer->add_option("--method", opt.method, "edm, ehs, adain, wct or hs")
        ->check(CLI::IsMember({"edm", "ehs", "adain", "wct", "hs"}));
    add_common(transfer, opt);

    CLI::App* metrics = app.add_subcommand("metrics", "distances between two maps");
    metrics->add_option("a", a_path, "first PNG or feature file")->required();
    metrics->add_option("b", b_path, "second PNG or feature file")->required();
    add_common(metrics, opt);

    CLI::App* bench = app.add_subcommand("bench", "collision ratio and sort timing");
    bench->add_option("input", bench_input, "PNG or feature file")->required();
    bench->add_option("--max-filters", max_filters, "largest filter count to test")
        ->check(CLI::Range(1, 10));
    add_common(bench, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (transfer->parsed()) return cmd_transfer(opt, content_path, style_path);
        if (metrics->parsed()) return cmd_metrics(opt, a_path, b_path);
        if (bench->parsed()) return cmd_bench(opt, bench_input, max_filters);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
