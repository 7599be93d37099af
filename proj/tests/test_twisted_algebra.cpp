#include <gtest/gtest.h>

#include <random>

#include "weylkit/twisted_algebra.hpp"

using namespace weylkit;
using E = Exponent;

namespace {

Laurent mono(int p, std::int64_t a, std::int64_t b, int c = 1) { return Laurent::monomial(p, a, b, c); }
NormValue nv(std::int64_t a, std::int64_t b, int p) { return NormValue(E(a, b, p)); }

GroupK random_K(std::mt19937_64& rng) { return {random_laurent(rng, 2, 3, 3), random_laurent(rng, 2, 3, 3)}; }
GroupT random_T(std::mt19937_64& rng) {
    return {random_laurent(rng, 3, 3, 2), random_laurent(rng, 3, 3, 2), random_laurent(rng, 3, 3, 2)};
}

// Random element whose leading exponent is exactly v, so nu ties can be engineered.
Laurent with_nu(std::mt19937_64& rng, int p, const E& v) {
    std::uniform_int_distribution<int> c(1, p - 1), up(1, 3), n(0, 2);
    Laurent x = Laurent::monomial(p, v, c(rng));
    for (int k = n(rng); k > 0; --k) x = x + Laurent::monomial(p, v + E(up(rng), up(rng) - 2, p), c(rng));
    if (x.nu() != NormValue(v)) x = Laurent::monomial(p, v, c(rng));
    return x;
}

}  // namespace

TEST(Laurent, ArithmeticAndParse) {
    auto x = Laurent::x(2);
    EXPECT_TRUE((x + x).is_zero());
    EXPECT_EQ(Laurent::one(2).nu(), nv(0, 0, 2));
    EXPECT_TRUE(Laurent(3).nu().is_infinite());
    auto y = Laurent::parse("x^{2+1r} + x + 1", 2);
    EXPECT_EQ(y, mono(2, 2, 1) + mono(2, 1, 0) + mono(2, 0, 0));
    EXPECT_EQ(Laurent::parse(y.str(), 2), y);
    EXPECT_EQ(Laurent::parse("2*x^{-1-2r}", 3), mono(3, -1, -2, 2));
    EXPECT_EQ(Laurent::parse("x^{1r} + x^{3}", 3), mono(3, 0, 1) + mono(3, 3, 0));
    EXPECT_EQ(Laurent::parse("0", 2), Laurent(2));
    EXPECT_THROW(Laurent::parse("x^{1+", 2), std::invalid_argument);
    EXPECT_THROW(Laurent::parse("x - 1", 2), std::invalid_argument);
    EXPECT_THROW(Laurent(5), std::invalid_argument);
    EXPECT_THROW((void)(Laurent::x(2) + Laurent::x(3)), std::invalid_argument);
    EXPECT_THROW((void)(x + Laurent::one(2)).inverse(), std::domain_error);
    EXPECT_EQ(mono(3, 2, -1, 2) * mono(3, 2, -1, 2).inverse(), Laurent::one(3));
}

TEST(Laurent, ThetaAndValuationLaws) {
    EXPECT_EQ(Laurent::one(2).theta(), Laurent::one(2));
    auto x = mono(2, 1, 0) + mono(2, 2, 0);
    EXPECT_EQ(x.theta(), mono(2, 0, 1) + mono(2, 0, 2));
    EXPECT_EQ(x.nu(), nv(1, 0, 2));
    EXPECT_EQ(x.theta().nu(), nv(0, 1, 2));
    std::mt19937_64 rng(11);
    for (int p : {2, 3}) {
        for (int i = 0; i < 200; ++i) {
            auto a = random_laurent(rng, p, 4, 4);
            EXPECT_EQ(a.theta().theta(), a.pow(static_cast<unsigned>(p)));
        }
        for (int i = 0; i < 10000; ++i) {
            auto a = random_laurent(rng, p, 3, 3), b = random_laurent(rng, p, 3, 3);
            ASSERT_EQ((a * b).nu(), a.nu() + b.nu());
            auto s = (a + b).nu();
            ASSERT_GE(s, std::min(a.nu(), b.nu()));
            if (a.nu() != b.nu()) {
                ASSERT_EQ(s, std::min(a.nu(), b.nu()));
            }
            ASSERT_EQ(a.theta().nu(), detail::scale_nu(E(0, 1, p), a.nu()));
        }
    }
}

TEST(Norms, Examples) {
    auto x2 = Laurent::x(2);
    EXPECT_TRUE(norm_R(Laurent(2), Laurent(2)).is_zero());
    EXPECT_EQ(norm_R(Laurent::one(2), Laurent(2)), Laurent::one(2));
    EXPECT_EQ(norm_R(x2, x2), mono(2, 0, 1) + mono(2, 2, 0) + mono(2, 2, 1));
    EXPECT_EQ(norm_R(x2, x2).nu(), nv(0, 1, 2));
    EXPECT_EQ(norm_R(Laurent(2), x2), mono(2, 2, 1));
    auto x3 = Laurent::x(3), z3 = Laurent(3);
    EXPECT_TRUE(norm_N(z3, z3, z3).is_zero());
    EXPECT_EQ(norm_N(z3, z3, Laurent::one(3)), Laurent::one(3));
    EXPECT_EQ(norm_N(x3, z3, z3), -mono(3, 4, 2));
    EXPECT_EQ(norm_N(z3, x3, z3), mono(3, 1, 1));
    EXPECT_THROW(norm_R(x3, x3), std::invalid_argument);
}

TEST(GroupK, Laws) {
    auto x = Laurent::x(2);
    GroupK g{x, x};
    EXPECT_EQ(g * GroupK::identity(), g);
    EXPECT_EQ((GroupK{x, Laurent(2)} * GroupK{x, Laurent(2)}), GroupK::identity());
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        auto a = random_K(rng), b = random_K(rng), c = random_K(rng);
        EXPECT_EQ(a * a.inverse(), GroupK::identity());
        EXPECT_EQ(a.inverse() * a, GroupK::identity());
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(GroupT, Laws) {
    auto x = Laurent::x(3);
    GroupT g{x, x, x};
    EXPECT_EQ(g * GroupT::identity(), g);
    GroupT h{x, Laurent(3), Laurent(3)};
    auto cube = h * h * h;
    EXPECT_TRUE(cube.r.is_zero());
    // (x,0,0)^2 = (2x, x^{sqrt3+1}, -x^{sqrt3+2}); one more factor gives s = 3 x^{sqrt3+1} = 0
    EXPECT_TRUE(cube.s.is_zero());
    EXPECT_EQ(cube.t, -(mono(3, 2, 1) + mono(3, 2, 1, 2) + mono(3, 2, 1)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        auto a = random_T(rng), b = random_T(rng), c = random_T(rng);
        EXPECT_EQ(a * a.inverse(), GroupT::identity());
        EXPECT_EQ(a.inverse() * a, GroupT::identity());
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Phi, ExamplesAndClosedForms) {
    auto x2 = Laurent::x(2), x3 = Laurent::x(3);
    EXPECT_TRUE(phi_K(GroupK::identity()).is_infinite());
    EXPECT_TRUE(phi_T(GroupT::identity()).is_infinite());
    EXPECT_EQ(phi_K({x2, x2}), nv(0, 1, 2));
    EXPECT_EQ(phi_T({Laurent(3), Laurent(3), x3}), nv(2, 0, 3));
    EXPECT_TRUE(nu_R_closed(Laurent(2), Laurent(2)).is_infinite());
    EXPECT_EQ(nu_R_closed(x2, x2), nv(0, 1, 2));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(-3, 3);
    std::size_t ties_K = 0, ties_T = 0;
    for (int i = 0; i < 10000; ++i) {
        GroupK g = random_K(rng);
        ASSERT_EQ(phi_K(g), nu_R_closed(g.s, g.t)) << g.s.str() << " | " << g.t.str();
        GroupT h = random_T(rng);
        ASSERT_EQ(phi_T(h), nu_N_closed(h.r, h.s, h.t)) << h.r.str() << " | " << h.s.str() << " | " << h.t.str();
        // nu(s) = (1 + sqrt2) nu(t) puts all three terms of R on one value
        E vt(d(rng), d(rng), 2);
        Laurent t = with_nu(rng, 2, vt), s = with_nu(rng, 2, E(1, 1, 2) * vt);
        ++ties_K;
        ASSERT_EQ(norm_R(s, t).nu(), nu_R_closed(s, t));
        // nu(s) = (1 + sqrt3) nu(r), nu(t) = (sqrt3 + 2) nu(r) ties N
        E vr(d(rng), d(rng), 3);
        Laurent r = with_nu(rng, 3, vr), s3 = with_nu(rng, 3, E(1, 1, 3) * vr), t3 = with_nu(rng, 3, E(2, 1, 3) * vr);
        ++ties_T;
        ASSERT_EQ(norm_N(r, s3, t3).nu(), nu_N_closed(r, s3, t3));
        // products: nu R(g1 g2) >= min, nu N(h1 h2) >= min
        GroupK g2 = random_K(rng);
        ASSERT_GE(phi_K(g * g2), std::min(phi_K(g), phi_K(g2)));
        GroupT h2 = random_T(rng);
        ASSERT_GE(phi_T(h * h2), std::min(phi_T(h), phi_T(h2)));
    }
    EXPECT_EQ(ties_K, 10000u);
    EXPECT_EQ(ties_T, 10000u);
}

TEST(Norms, MonomialAnisotropyGrid) {
    for (int p : {2, 3}) {
        std::vector<Laurent> grid{Laurent(p)};
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) grid.push_back(mono(p, a, b, p == 3 && (a + b) % 2 ? 2 : 1));
        for (const auto& s : grid)
            for (const auto& t : grid) {
                if (p == 2) {
                    bool zero = s.is_zero() && t.is_zero();
                    ASSERT_EQ(norm_R(s, t).is_zero(), zero);
                    ASSERT_EQ(norm_R(s, t).nu(), nu_R_closed(s, t));
                    continue;
                }
                for (const auto& r : grid) {
                    bool zero = r.is_zero() && s.is_zero() && t.is_zero();
                    ASSERT_EQ(norm_N(r, s, t).is_zero(), zero);
                    ASSERT_EQ(norm_N(r, s, t).nu(), nu_N_closed(r, s, t));
                }
            }
    }
}

TEST(Scaling, KAndT) {
    std::mt19937_64 rng(6);
    auto x2 = Laurent::x(2);
    GroupK unit{Laurent::one(2), Laurent(2)};
    EXPECT_EQ(norm_R(unit.s, unit.t), Laurent::one(2));
    GroupK g{x2 + Laurent::one(2), mono(2, 0, 1)};
    EXPECT_EQ(scaling_K(unit, g), g);
    GroupK par{x2, Laurent(2)};
    GroupK uv{mono(2, 1, 1), mono(2, -1, 0)};
    auto sc = scaling_K(par, uv);
    EXPECT_EQ(sc.s, mono(2, 1, 1) * mono(2, 2, 0));
    EXPECT_EQ(sc.t, mono(2, -1, 0) * mono(2, -2, 2));
    EXPECT_THROW(scaling_K(GroupK{x2, x2}, uv), std::invalid_argument);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < 500; ++i) {
        GroupK pk{Laurent::monomial(2, d(rng), d(rng)), Laurent(2)};
        if (i % 2) pk = {Laurent(2), Laurent::monomial(2, d(rng), d(rng))};
        auto R = norm_R(pk.s, pk.t);
        auto a = random_K(rng), b = random_K(rng);
        EXPECT_EQ(scaling_K(pk, a * b), scaling_K(pk, a) * scaling_K(pk, b));
        EXPECT_EQ(phi_K(scaling_K(pk, a)), phi_K(a) + NormValue(E(2, 0, 2) * R.nu().value()));

        GroupT pt{Laurent(3), Laurent(3), Laurent::monomial(3, d(rng), d(rng))};
        if (i % 3 == 1) pt = {Laurent::monomial(3, d(rng), d(rng)), Laurent(3), Laurent(3)};
        if (i % 3 == 2) pt = {Laurent(3), Laurent::monomial(3, d(rng), d(rng)), Laurent(3)};
        auto N = norm_N(pt.r, pt.s, pt.t);
        auto c = random_T(rng), e = random_T(rng);
        EXPECT_EQ(scaling_T(pt, c * e), scaling_T(pt, c) * scaling_T(pt, e));
        EXPECT_EQ(phi_T(scaling_T(pt, c)), phi_T(c) + NormValue(E(2, 0, 3) * N.nu().value()));
    }
}

TEST(AxiomV1, SampledClosure) {
    std::mt19937_64 rng(8);
    auto inf = check_V1<GroupK>(NormValue::infinity(), 100, rng, phi_K, random_K);
    EXPECT_TRUE(inf.ok());
    auto k2 = check_V1<GroupK>(nv(0, 1, 2), 1000, rng, phi_K, random_K);
    EXPECT_TRUE(k2.ok());
    EXPECT_GT(k2.qualifying, 10u);
    auto k3 = check_V1<GroupT>(nv(2, 0, 3), 1000, rng, phi_T, random_T);
    EXPECT_TRUE(k3.ok());
    EXPECT_GT(k3.qualifying, 10u);
    EXPECT_EQ(k3.pairs, 1000u);
}

TEST(OddRoot, Valuation) {
    auto f = fields::sqrt_2_plus_sqrt2();
    EXPECT_EQ(*odd_root_valuation(Laurent::one(2)), NumberFieldElem(f, {Rational(0)}));
    EXPECT_EQ(*odd_root_valuation(Laurent::x(2)), NumberFieldElem::generator(f));
    EXPECT_FALSE(odd_root_valuation(Laurent(2)).has_value());
    EXPECT_NEAR(odd_root_valuation(mono(2, 1, 1))->to_double(), std::sqrt(2 + std::sqrt(2.0)) * (1 + std::sqrt(2.0)), 1e-12);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        auto a = random_laurent(rng, 2, 3, 3), b = random_laurent(rng, 2, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(*odd_root_valuation(a * b), *odd_root_valuation(a) + *odd_root_valuation(b));
    }
}

TEST(TwoVar, Valuation) {
    for (int p : {2, 3}) {
        auto s = TwoVarPoly::monomial(p, 1, 0), t = TwoVarPoly::monomial(p, 0, 1), one = TwoVarPoly::monomial(p, 0, 0);
        EXPECT_EQ(valuation_2var(s, one), nv(1, 0, p));
        EXPECT_EQ(valuation_2var(t, one), nv(0, 1, p));
        EXPECT_EQ(s.theta(), t);
        EXPECT_EQ(t.theta(), TwoVarPoly::monomial(p, p, 0));
        EXPECT_THROW(valuation_2var(s, TwoVarPoly(p)), std::invalid_argument);
    }
    auto s = TwoVarPoly::monomial(2, 1, 0), t = TwoVarPoly::monomial(2, 0, 1), one = TwoVarPoly::monomial(2, 0, 0);
    EXPECT_EQ(valuation_2var(s * s * t + t * t * t, one), nv(2, 1, 2));
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> e(0, 4), n(1, 4);
    for (int p : {2, 3}) {
        std::uniform_int_distribution<int> c(1, p - 1);
        auto rnd = [&] {
            TwoVarPoly q(p);
            for (int k = n(rng); k > 0; --k) q = q + TwoVarPoly::monomial(p, e(rng), e(rng), c(rng));
            if (q.is_zero()) q = TwoVarPoly::monomial(p, 0, 0);
            return q;
        };
        for (int i = 0; i < 200; ++i) {
            auto P = rnd(), Q = rnd(), F = rnd();
            EXPECT_EQ(P.theta().nu(), detail::scale_nu(E(0, 1, p), P.nu()));
            // common factors cancel
            EXPECT_EQ(valuation_2var(P * F, Q * F), valuation_2var(P, Q));
            EXPECT_EQ((P * Q).nu(), P.nu() + Q.nu());
        }
    }
}
