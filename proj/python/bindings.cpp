#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edmatch/color_space.hpp"
#include "edmatch/core.hpp"
#include "edmatch/edm.hpp"
#include "edmatch/ehs.hpp"
#include "edmatch/feature_file.hpp"
#include "edmatch/gaussian.hpp"
#include "edmatch/metrics.hpp"

namespace py = pybind11;
using namespace edmatch;

namespace {

FeatureMap to_map(const py::array_t<float, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 3) {
        throw std::invalid_argument("expected a (C, H, W) float32 array");
    }
    const int c = static_cast<int>(arr.shape(0));
    const int h = static_cast<int>(arr.shape(1));
    const int w = static_cast<int>(arr.shape(2));
    std::vector<float> data(arr.data(), arr.data() + arr.size());
    return FeatureMap(c, h, w, std::move(data));
}

py::array_t<float> from_map(const FeatureMap& f) {
    py::array_t<float> arr({f.channels(), f.height(), f.width()});
    std::copy(f.data().begin(), f.data().end(), arr.mutable_data());
    return arr;
}

using Arr = py::array_t<float, py::array::c_style | py::array::forcecast>;

EdmConfig make_cfg(int filters, double alpha, double eig_epsilon) {
    EdmConfig cfg;
    cfg.filter_count = filters;
    cfg.alpha = alpha;
    cfg.eig_epsilon = eig_epsilon;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_edmatch, m) {
    m.doc() = "Exact distribution matching transforms on (C, H, W) feature maps";

    m.def(
        "edm",
        [](const Arr& content, const Arr& style, int filters, double alpha,
           double eig_epsilon) {
            return from_map(edm(to_map(content), to_map(style),
                                make_cfg(filters, alpha, eig_epsilon)));
        },
        py::arg("content"), py::arg("style"), py::arg("filters") = 10,
        py::arg("alpha") = 1.0, py::arg("eig_epsilon") = 1e-8);

    m.def(
        "ehs",
        [](const Arr& content, const Arr& style, int filters) {
            return from_map(match_channelwise(to_map(content), to_map(style),
                                              default_bank(filters)));
        },
        py::arg("content"), py::arg("style"), py::arg("filters") = 10,
        "Channel-wise exact histogram specification (step 1 of edm)");

    m.def(
        "adain",
        [](const Arr& content, const Arr& style) {
            return from_map(adain(to_map(content), to_map(style)));
        },
        py::arg("content"), py::arg("style"));

    m.def(
        "wct",
        [](const Arr& content, const Arr& style, double eig_epsilon) {
            return from_map(wct(to_map(content), to_map(style), eig_epsilon));
        },
        py::arg("content"), py::arg("style"), py::arg("eig_epsilon") = 1e-8);

    m.def(
        "strength",
        [](const Arr& content, const Arr& stylized, double alpha) {
            return from_map(strength(to_map(content), to_map(stylized), alpha));
        },
        py::arg("content"), py::arg("stylized"), py::arg("alpha"));

    m.def(
        "interpolate",
        [](const Arr& content, const std::vector<Arr>& styles,
           const std::vector<double>& weights, int filters) {
            std::vector<FeatureMap> maps;
            maps.reserve(styles.size());
            for (const auto& s : styles) maps.push_back(to_map(s));
            EdmConfig cfg;
            cfg.filter_count = filters;
            return from_map(interpolate(to_map(content), maps, weights, cfg));
        },
        py::arg("content"), py::arg("styles"), py::arg("weights"),
        py::arg("filters") = 10);

    m.def(
        "collision_ratio",
        [](const Arr& f, int filters) {
            return collision_ratio(to_map(f), default_bank(filters));
        },
        py::arg("f"), py::arg("filters") = 10);

    m.def(
        "default_bank",
        [](int k) {
            py::list out;
            for (const Kernel& kern : default_bank(k).kernels) {
                py::array_t<double> a({kern.size, kern.size});
                std::copy(kern.weights.begin(), kern.weights.end(), a.mutable_data());
                out.append(a);
            }
            return out;
        },
        py::arg("k") = 10);

    m.def("content_l2",
          [](const Arr& a, const Arr& b) { return content_l2(to_map(a), to_map(b)); });
    m.def("gram_loss",
          [](const Arr& a, const Arr& b) { return gram_loss(to_map(a), to_map(b)); });
    m.def("mean_std_loss", [](const Arr& a, const Arr& b) {
        return mean_std_loss(to_map(a), to_map(b));
    });
    m.def(
        "histogram_l2",
        [](const Arr& a, const Arr& b, int bins) {
            return histogram_l2(to_map(a), to_map(b), bins);
        },
        py::arg("a"), py::arg("b"), py::arg("bins") = 256);
    m.def(
        "cmd",
        [](const Arr& a, const Arr& b, int order) {
            return cmd(to_map(a), to_map(b), order);
        },
        py::arg("a"), py::arg("b"), py::arg("order") = 5);
    m.def(
        "swd",
        [](const Arr& a, const Arr& b, int directions, std::uint64_t seed) {
            SwdConfig cfg;
            cfg.directions = directions;
            cfg.seed = seed;
            return swd(to_map(a), to_map(b), cfg);
        },
        py::arg("a"), py::arg("b"), py::arg("directions") = 0, py::arg("seed") = 0);
    m.def("sw1d", [](const std::vector<float>& x, const std::vector<float>& y) {
        return sw1d(x, y);
    });

    m.def(
        "metric_report",
        [](const Arr& a, const Arr& b, int directions, std::uint64_t seed, int bins,
           int order) {
            SwdConfig cfg;
            cfg.directions = directions;
            cfg.seed = seed;
            const MetricReport r = compute_report(to_map(a), to_map(b), cfg, bins, order);
            py::dict d;
            if (r.content) d["content"] = *r.content;
            d["gram"] = r.gram;
            d["mean_std"] = r.mean_std;
            d["histogram_l2"] = r.histogram_l2;
            d["cmd"] = r.cmd;
            d["swd"] = r.swd;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("directions") = 0, py::arg("seed") = 0,
        py::arg("bins") = 256, py::arg("order") = 5);

    m.def("rgb_to_lab", [](const Arr& f) { return from_map(rgb_to_lab(to_map(f))); });
    m.def("lab_to_rgb", [](const Arr& f) { return from_map(lab_to_rgb(to_map(f))); });

    m.def("read_feature_file",
          [](const std::string& path) { return from_map(read_feature_file(path)); });
    m.def("write_feature_file", [](const std::string& path, const Arr& f) {
        write_feature_file(path, to_map(f));
    });
}
