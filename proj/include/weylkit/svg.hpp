#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/root_system.hpp"

namespace weylkit {

/// Rank-2 picture: a shaded hull polygon, orbit markers, lattice points and
/// polylines, all in simple-root coordinates.
template <OrderedField F>
struct Scene {
    std::vector<ModelPoint<F>> hull;  // polygon, drawn in angular order
    std::vector<ModelPoint<F>> orbit;
    std::vector<ModelPoint<F>> points;
    std::vector<std::vector<ModelPoint<F>>> paths;
};

namespace detail {
inline std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}
}  // namespace detail

/// SVG 1.1 text. Coordinates are decimal approximations of the Euclidean
/// embedding given by a Cholesky factor of the Gram matrix; they are for
/// display only.
template <OrderedField F>
std::string emit_svg(const RootSystem<F>& rs, const Scene<F>& scene) {
    if (rs.rank() != 2) throw std::invalid_argument("emit_svg: only rank-2 systems can be drawn");
    const double g00 = rs.gram(0, 0).to_double(), g01 = rs.gram(0, 1).to_double(), g11 = rs.gram(1, 1).to_double();
    const double e1x = std::sqrt(g00), e2x = g01 / e1x, e2y = std::sqrt(g11 - e2x * e2x);
    const double unit = 40.0;
    auto embed = [&](const ModelPoint<F>& p) {
        double c0 = p[0].to_double(), c1 = p[1].to_double();
        return std::pair<double, double>{unit * (c0 * e1x + c1 * e2x), -unit * (c1 * e2y)};
    };

    double lo_x = -unit, hi_x = unit, lo_y = -unit, hi_y = unit;
    auto grow = [&](const ModelPoint<F>& p) {
        auto [x, y] = embed(p);
        lo_x = std::min(lo_x, x - unit);
        hi_x = std::max(hi_x, x + unit);
        lo_y = std::min(lo_y, y - unit);
        hi_y = std::max(hi_y, y + unit);
    };
    for (const auto& p : scene.hull) grow(p);
    for (const auto& p : scene.orbit) grow(p);
    for (const auto& p : scene.points) grow(p);
    for (const auto& path : scene.paths)
        for (const auto& p : path) grow(p);

    using detail::fixed3;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed3(lo_x) + " " + fixed3(lo_y) +
           " " + fixed3(hi_x - lo_x) + " " + fixed3(hi_y - lo_y) + "\">\n";
    out += "  <title>" + rs.label() + "</title>\n";
    if (!scene.hull.empty()) {
        std::vector<std::pair<double, double>> poly;
        for (const auto& p : scene.hull) poly.push_back(embed(p));
        std::sort(poly.begin(), poly.end(), [](const auto& a, const auto& b) {
            return std::atan2(a.second, a.first) < std::atan2(b.second, b.first);
        });
        out += "  <polygon class=\"hull\" fill=\"#dde8f4\" stroke=\"#4a6f96\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i)
            out += (i ? " " : "") + fixed3(poly[i].first) + "," + fixed3(poly[i].second);
        out += "\"/>\n";
    }
    for (const auto& p : scene.points) {
        auto [x, y] = embed(p);
        out += "  <circle class=\"point\" cx=\"" + fixed3(x) + "\" cy=\"" + fixed3(y) + "\" r=\"2.5\" fill=\"#333333\"/>\n";
    }
    for (const auto& p : scene.orbit) {
        auto [x, y] = embed(p);
        out += "  <circle class=\"orbit\" cx=\"" + fixed3(x) + "\" cy=\"" + fixed3(y) + "\" r=\"4.5\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& path : scene.paths) {
        out += "  <polyline class=\"path\" fill=\"none\" stroke=\"#2f7d32\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < path.size(); ++i) {
            auto [x, y] = embed(path[i]);
            out += (i ? " " : "") + fixed3(x) + "," + fixed3(y);
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace weylkit
