#include <gtest/gtest.h>

#include "weylkit/model_space.hpp"
#include "weylkit/svg.hpp"

using namespace weylkit;
using RS = RootSystem<Rational>;
using P = ModelPoint<Rational>;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST(Svg, EmptySceneSkeleton) {
    auto s = emit_svg(RS::build("A2"), Scene<Rational>{});
    EXPECT_EQ(s,
              "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
              "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-40.000 -40.000 80.000 80.000\">\n"
              "  <title>A2</title>\n"
              "</svg>\n");
}

TEST(Svg, OrbitMarkersAndStability) {
    auto a2 = RS::build("A2");
    auto orbit = a2.weyl_orbit(P({1, 1}));
    Scene<Rational> sc;
    sc.orbit.assign(orbit.begin(), orbit.end());
    sc.hull = sc.orbit;
    sc.points = enumerate_AQ(a2, P({1, 1}));
    auto s = emit_svg(a2, sc);
    EXPECT_EQ(count(s, "class=\"orbit\""), 6u);
    EXPECT_EQ(count(s, "class=\"point\""), 7u);
    EXPECT_EQ(count(s, "class=\"hull\""), 1u);
    EXPECT_EQ(emit_svg(a2, sc), s);
}

TEST(Svg, RankOtherThanTwoRefused) {
    EXPECT_THROW(emit_svg(RS::build("A1"), Scene<Rational>{}), std::invalid_argument);
    EXPECT_THROW(emit_svg(RS::build("A3"), Scene<Rational>{}), std::invalid_argument);
}
