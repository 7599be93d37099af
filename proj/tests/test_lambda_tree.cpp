#include <gtest/gtest.h>

#include <random>

#include "weylkit/lambda_tree.hpp"

using namespace weylkit;
using Z = Rational;  // integer-valued rationals model Lambda = Z
using ZZ = LexPair<Rational, Rational>;

namespace {

auto int_length = [](std::mt19937_64& rng) { return Z(std::uniform_int_distribution<int>(1, 9)(rng)); };
auto lex_length = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 4);
    int hi = d(rng), lo = std::uniform_int_distribution<int>(-5, 5)(rng);
    if (hi == 0 && lo <= 0) lo = 1 + std::abs(lo);
    return ZZ(Z(hi), Z(lo));
};

std::mt19937_64::result_type seed_of(int s) {
    return static_cast<std::mt19937_64::result_type>(s) * 7919u + 3u;
}

}  // namespace

TEST(ProjectiveValuation, ZeroAndHTree) {
    ProjectiveValuation<Z> zero(end_labels(5));
    EXPECT_TRUE(check_pv(zero).ok());
    auto h = h_tree<Z>(Z(3), Z(1)).valuation();
    EXPECT_TRUE(check_pv(h).ok());
    // a,b | c,d with bar 3
    EXPECT_EQ(h(0, 1, 2, 3), Z(0));
    EXPECT_EQ(h(0, 2, 1, 3), Z(3));
    EXPECT_EQ(h(0, 2, 3, 1), Z(-3));
    EXPECT_EQ(h(0, 3, 1, 2), Z(3));
    std::set<Z> values;
    h.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) { values.insert(h(a, b, c, d)); });
    EXPECT_EQ(values, (std::set<Z>{Z(-3), Z(0), Z(3)}));
    EXPECT_TRUE(check_pv(star_tree<Z>(4, Z(2)).valuation()).ok());
    auto s = star_tree<Z>(4, Z(2)).valuation();
    s.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) { EXPECT_EQ(s(a, b, c, d), Z(0)); });
}

TEST(ProjectiveValuation, InjectedSignFlipIsReported) {
    auto h = h_tree<Z>(Z(3), Z(1)).valuation();
    h.set(0, 2, 1, 3, Z(-3));
    auto rep = check_pv(h);
    ASSERT_FALSE(rep.ok());
    std::size_t pv1 = 0;
    for (const auto& v : rep.violations) {
        if (v.axiom != "PV1") continue;
        ++pv1;
        // every PV1 failure compares against the flipped entry
        std::vector<std::vector<EndId>> partners{{0, 2, 1, 3}, {1, 3, 0, 2}, {0, 2, 3, 1}};
        EXPECT_TRUE(std::find(partners.begin(), partners.end(), v.ends) != partners.end());
    }
    EXPECT_EQ(pv1, 3u);
}

TEST(ThreePointCase, Trichotomy) {
    ProjectiveValuation<Z> zero(end_labels(4));
    EXPECT_EQ(three_point_case(zero, 0, 1, 2, 3), 4);
    auto h = h_tree<Z>(Z(3), Z(1)).valuation();
    // a against (b, c, d): the line d -> b meets kappa(c,a,d) before kappa(c,a,b)
    EXPECT_EQ(h(1, 0, 2, 3), Z(0));
    EXPECT_EQ(h(2, 0, 3, 1), Z(3));
    EXPECT_EQ(three_point_case(h, 0, 1, 2, 3), 2);
    EXPECT_EQ(three_point_case(h, 0, 2, 3, 1), 1);
    EXPECT_EQ(three_point_case(h, 0, 3, 1, 2), 3);
    for (int s = 0; s < 50; ++s) {
        auto w = tree_generator<Z>(seed_of(s), 5 + s % 3, int_length).valuation();
        w.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) { EXPECT_NO_THROW(three_point_case(w, a, b, c, d)); });
    }
    auto bad = h;
    bad.set(1, 0, 2, 3, Z(3));
    EXPECT_THROW(three_point_case(bad, 0, 1, 2, 3), std::invalid_argument);
}

TEST(RootedTreeDatum, FromValuation) {
    ProjectiveValuation<Z> zero(end_labels(5));
    auto star = datum_from_valuation(zero, {0, 1, 2});
    for (EndId a = 0; a < 5; ++a)
        for (EndId b = 0; b < 5; ++b)
            EXPECT_EQ(star.wedge(a, b), a == b ? Extended<Z>::infinity() : Extended<Z>(Z(0)));
    auto h = h_tree<Z>(Z(3), Z(1)).valuation();
    // based at (c, d, a) the origin is the cd end of the bar; b splits from a at height 3
    auto t = datum_from_valuation(h, {2, 3, 0});
    EXPECT_EQ(t.wedge(1, 0), Extended<Z>(Z(3)));
    EXPECT_EQ(t.wedge(1, 2), Extended<Z>(Z(0)));
    EXPECT_TRUE(t.check().ok());
    auto bad = h;
    bad.set(0, 2, 1, 3, Z(-3));
    EXPECT_THROW(datum_from_valuation(bad, {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(datum_from_valuation(h, {0, 0, 2}), std::invalid_argument);
}

TEST(RootedTreeDatum, AxiomsAndUltrametricOnGeneratedData) {
    for (int s = 0; s < 40; ++s) {
        auto w = tree_generator<Z>(seed_of(s), 4 + s % 4, int_length).valuation();
        auto t = datum_from_valuation(w, {0, 1, 2});
        EXPECT_TRUE(t.check().ok());
        for (EndId a = 0; a < t.size(); ++a)
            for (EndId b = 0; b < t.size(); ++b)
                for (EndId c = 0; c < t.size(); ++c) {
                    if (a == b || a == c || b == c) continue;
                    std::vector<Z> v{t.meet(a, b), t.meet(a, c), t.meet(b, c)};
                    std::sort(v.begin(), v.end());
                    EXPECT_EQ(v[0], v[1]);
                }
    }
}

TEST(TreeDistance, Examples) {
    RootedTreeDatum<Z> tripod(end_labels(3));
    EXPECT_EQ(tripod.distance({0, Z(5)}, {0, Z(2)}), Z(3));
    EXPECT_EQ(tripod.distance({0, Z(2)}, {1, Z(3)}), Z(5));
    EXPECT_EQ(tripod.branch_point(0, 1, 2), (TreePoint<Z>{0, Z(0)}));
    EXPECT_EQ(tripod.canonical({2, Z(0)}), (TreePoint<Z>{0, Z(0)}));
    EXPECT_EQ(tripod.canonical({2, Z(1)}), (TreePoint<Z>{2, Z(1)}));
    EXPECT_THROW((void)tripod.canonical({0, Z(-1)}), std::invalid_argument);
}

TEST(TreeDistance, MetricProperties) {
    std::mt19937_64 rng(5);
    for (int s = 0; s < 5; ++s) {
        auto t = datum_from_valuation(tree_generator<Z>(seed_of(s), 6, int_length).valuation(), {0, 1, 2});
        std::uniform_int_distribution<EndId> e(0, t.size() - 1);
        std::uniform_int_distribution<int> h(0, 30);
        auto rnd = [&] { return TreePoint<Z>{e(rng), Z(h(rng))}; };
        for (int i = 0; i < 10000; ++i) {
            auto p = rnd(), q = rnd(), r = rnd();
            EXPECT_EQ(t.distance(p, p), Z(0));
            EXPECT_EQ(t.distance(p, q), t.distance(q, p));
            EXPECT_LE(t.distance(p, r), t.distance(p, q) + t.distance(q, r));
            // canonical points are equal iff at distance 0
            EXPECT_EQ(t.canonical(p) == t.canonical(q), t.distance(p, q) == Z(0));
        }
    }
}

TEST(BranchPoint, HTreeAndSymmetry) {
    auto h = h_tree<Z>(Z(3), Z(1)).valuation();
    auto t = datum_from_valuation(h, {2, 3, 0});
    // origin at the cd end; the ab end of the bar is at height 3 toward a and b
    EXPECT_EQ(t.branch_point(0, 1, 2), (TreePoint<Z>{0, Z(3)}));
    EXPECT_EQ(t.branch_point(2, 3, 0), (TreePoint<Z>{0, Z(0)}));
    for (int s = 0; s < 30; ++s) {
        auto d = datum_from_valuation(tree_generator<Z>(seed_of(s), 6, int_length).valuation(), {0, 1, 2});
        for (EndId a = 0; a < d.size(); ++a)
            for (EndId b = 0; b < d.size(); ++b)
                for (EndId c = 0; c < d.size(); ++c) {
                    if (a == b || a == c || b == c) continue;
                    auto k = d.branch_point(a, b, c);
                    EXPECT_EQ(k, d.branch_point(c, a, b));
                    EXPECT_EQ(k, d.branch_point(b, a, c));
                    // on all three lines
                    EXPECT_NO_THROW((void)d.line_coordinate(k, a, b));
                    EXPECT_NO_THROW((void)d.line_coordinate(k, a, c));
                    EXPECT_NO_THROW((void)d.line_coordinate(k, b, c));
                }
    }
}

TEST(CanonicalValuation, HTreeAndPV) {
    auto h = h_tree<Z>(Z(3), Z(1)).valuation();
    auto t = datum_from_valuation(h, {0, 1, 2});
    EXPECT_EQ(t.canonical_valuation(0, 2, 1, 3), Z(3));
    EXPECT_EQ(t.canonical_valuation(0, 2, 3, 1), Z(-3));
    EXPECT_EQ(t.canonical_valuation(0, 1, 2, 3), Z(0));
    for (int s = 0; s < 20; ++s) {
        auto d = datum_from_valuation(tree_generator<Z>(seed_of(s), 5 + s % 3, int_length).valuation(), {0, 1, 2});
        EXPECT_TRUE(check_pv(d.valuation()).ok());
    }
}

TEST(RoundTrip, GeneratedTreesAllBases) {
    ProjectiveValuation<Z> zero(end_labels(5));
    EXPECT_TRUE(roundtrip_check(zero, {0, 1, 2}).ok());
    for (int s = 0; s < 100; ++s) {
        auto wz = tree_generator<Z>(seed_of(s), 4 + s % 4, int_length).valuation();
        EXPECT_TRUE(check_pv(wz).ok());
        EXPECT_TRUE(roundtrip_check(wz, {0, 1, 2}).ok()) << s;
        auto wl = tree_generator<ZZ>(seed_of(s), 4 + s % 4, lex_length).valuation();
        EXPECT_TRUE(check_pv(wl).ok());
        EXPECT_TRUE(roundtrip_check(wl, {0, 1, 2}).ok()) << s;
    }
    auto w6 = tree_generator<Z>(99, 6, int_length).valuation();
    std::size_t bases = 0;
    for (EndId a = 0; a < 6; ++a)
        for (EndId b = 0; b < 6; ++b)
            for (EndId c = 0; c < 6; ++c) {
                if (a == b || a == c || b == c) continue;
                ++bases;
                EXPECT_TRUE(roundtrip_check(w6, {a, b, c}).ok()) << a << b << c;
            }
    EXPECT_EQ(bases, 120u);
    auto wq = tree_generator<Rational>(7, 6, [](std::mt19937_64& rng) {
                  return Rational(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 7)(rng));
              }).valuation();
    EXPECT_TRUE(roundtrip_check(wq, {3, 4, 5}).ok());
}

TEST(BaseChange, LexProjection) {
    auto hl = h_tree<ZZ>(ZZ(Z(1), Z(7)), ZZ(Z(0), Z(1))).valuation();
    auto t = datum_from_valuation(hl, {2, 3, 0});
    EXPECT_EQ(t.meet(0, 1), ZZ(Z(1), Z(7)));
    auto id = base_change(t, [](const ZZ& x) { return x; });
    EXPECT_EQ(id, t);
    auto proj = base_change(t, [](const ZZ& x) { return x.hi; });
    EXPECT_EQ(proj.meet(0, 1), Z(1));
    EXPECT_THROW(base_change(t, [](const ZZ& x) { return -x.hi; }), std::invalid_argument);
    std::mt19937_64 rng(3);
    for (int s = 0; s < 10; ++s) {
        auto d = datum_from_valuation(tree_generator<ZZ>(seed_of(s), 6, lex_length).valuation(), {0, 1, 2});
        auto dp = base_change(d, [](const ZZ& x) { return x.hi; });
        std::uniform_int_distribution<EndId> e(0, 5);
        std::uniform_int_distribution<int> hh(0, 12), hl2(-9, 9);
        for (int i = 0; i < 100; ++i) {
            TreePoint<ZZ> p{e(rng), ZZ(Z(hh(rng)), Z(hl2(rng)))}, q{e(rng), ZZ(Z(hh(rng)), Z(hl2(rng)))};
            if (p.height < ZZ{}) p.height = -p.height;
            if (q.height < ZZ{}) q.height = -q.height;
            EXPECT_EQ(dp.distance({p.end, p.height.hi}, {q.end, q.height.hi}), d.distance(p, q).hi);
        }
    }
}

TEST(RenderTree, HTree) {
    auto t = datum_from_valuation(h_tree<Z>(Z(3), Z(1)).valuation(), {2, 3, 0});
    EXPECT_EQ(render_tree(t), "branch at height 0\n  branch at height 3\n    end a\n    end b\n  end c\n  end d\n");
}
