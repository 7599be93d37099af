#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylkit/root_system.hpp"

namespace weylkit {

/// d(x, y) = sum over positive roots of |<y - x, a^v>|.
template <OrderedField F, OrderedGroup L>
L distance(const RootSystem<F>& rs, const ModelPoint<L>& x, const ModelPoint<L>& y) {
    ModelPoint<L> v = y - x;
    L acc{};
    for (const auto& a : rs.positive_roots()) acc = acc + abs_value(rs.pairing(v, a));
    return acc;
}

/// Hyperplane coordinates x^a = <x, a^v> / 2 for the simple roots a.
template <OrderedGroup L>
struct HyperplaneCoords {
    std::vector<L> values;
    friend bool operator==(const HyperplaneCoords&, const HyperplaneCoords&) = default;
};

template <OrderedField F, OrderedGroup L>
HyperplaneCoords<L> hyperplane_coords(const RootSystem<F>& rs, const ModelPoint<L>& x) {
    HyperplaneCoords<L> h;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        h.values.push_back(scalar_mul(F(1) / F(2), rs.pairing(x, rs.simple_root(i))));
    return h;
}

/// Inverse of hyperplane_coords: x = C^{-1} (2 x^a) with C the Cartan matrix.
template <OrderedField F, OrderedGroup L>
ModelPoint<L> from_hyperplane_coords(const RootSystem<F>& rs, const HyperplaneCoords<L>& h) {
    Matrix<F> c(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) c(i, j) = rs.cartan(i, j);
    ModelPoint<L> twice(h.values);
    for (auto& v : twice.coords) v = v + v;
    return c.inverse().apply(twice);
}

/// Expansion of the coroot a^v in simple coroots: a^v = sum_b q_b b^v,
/// q_b = p_b (b, b) / (a, a) for a = sum_b p_b b.
template <OrderedField F>
std::vector<F> coroot_coefficients(const RootSystem<F>& rs, const Root<F>& a) {
    std::vector<F> q;
    F na = rs.norm2(a);
    for (std::size_t b = 0; b < rs.rank(); ++b) q.push_back(a[b] * rs.gram(b, b) / na);
    return q;
}

/// d(0, x) read off the hyperplane coordinates alone: pass to the dominant
/// representative, whose coordinates are nonnegative, and sum
/// 2 q_b x^b over positive roots and simple b.
template <OrderedField F, OrderedGroup L>
L distance_origin_via_coords(const RootSystem<F>& rs, const HyperplaneCoords<L>& h) {
    auto x = from_hyperplane_coords(rs, h);
    auto dom = hyperplane_coords(rs, rs.dominant_rep(x).first);
    L acc{};
    for (const auto& a : rs.positive_roots()) {
        auto q = coroot_coefficients(rs, a);
        for (std::size_t b = 0; b < rs.rank(); ++b)
            if (q[b] != F(0)) acc = acc + scalar_mul(F(2) * q[b], dom.values[b]);
    }
    return acc;
}

template <OrderedField F, OrderedGroup L>
L distance_origin_via_coords(const RootSystem<F>& rs, const ModelPoint<L>& x) {
    return distance_origin_via_coords(rs, hyperplane_coords(rs, x));
}

/// z in seg(x, y) iff d(x, y) = d(x, z) + d(z, y).
template <OrderedField F, OrderedGroup L>
bool in_segment(const RootSystem<F>& rs, const ModelPoint<L>& x, const ModelPoint<L>& y, const ModelPoint<L>& z) {
    return distance(rs, x, y) == distance(rs, x, z) + distance(rs, z, y);
}

/// Discrete translation lattices offered for enumeration.
enum class LatticeKind { coroot, coweight };

template <OrderedField F>
std::vector<ModelPoint<F>> lattice_basis(const RootSystem<F>& rs, LatticeKind kind) {
    rs.require_crystallographic("lattice_basis");
    std::vector<ModelPoint<F>> b;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        b.push_back(kind == LatticeKind::coroot ? rs.coroot(rs.simple_root(i)) : rs.fundamental_coweight(i));
    return b;
}

namespace detail {

/// Points offset + sum n_i b_i with every coordinate inside [lo, hi].
template <OrderedField F>
std::vector<ModelPoint<F>> lattice_points_in_box(const std::vector<ModelPoint<F>>& basis, const ModelPoint<F>& offset,
                                                 const ModelPoint<F>& lo, const ModelPoint<F>& hi) {
    static_assert(std::is_same_v<F, Rational>, "lattice enumeration needs rational coordinates");
    const std::size_t n = offset.rank();
    Matrix<F> b(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = basis[j][i];
    Matrix<F> inv = b.inverse();
    // a linear form on a box is extremal at the corners
    std::vector<std::int64_t> nlo(n, INT64_MAX), nhi(n, INT64_MIN);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        ModelPoint<F> corner = ModelPoint<F>::zero(n);
        for (std::size_t i = 0; i < n; ++i) corner[i] = ((mask >> i) & 1 ? hi[i] : lo[i]) - offset[i];
        auto m = inv.apply(corner);
        for (std::size_t i = 0; i < n; ++i) {
            nlo[i] = std::min(nlo[i], m[i].floor());
            nhi[i] = std::max(nhi[i], m[i].ceil());
        }
    }
    std::vector<ModelPoint<F>> out;
    std::vector<std::int64_t> cur(nlo);
    for (;;) {
        ModelPoint<F> p = offset;
        for (std::size_t j = 0; j < n; ++j)
            if (cur[j] != 0) p = p + scale(F(cur[j]), basis[j]);
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) inside = !(p[i] < lo[i]) && !(hi[i] < p[i]);
        if (inside) out.push_back(p);
        std::size_t k = 0;
        while (k < n && cur[k] == nhi[k]) {
            cur[k] = nlo[k];
            ++k;
        }
        if (k == n) break;
        ++cur[k];
    }
    return out;
}

}  // namespace detail

/// All lattice points of seg(x, y) in the coset x + T.
template <OrderedField F>
std::vector<ModelPoint<F>> segment_lattice_points(const RootSystem<F>& rs, const ModelPoint<F>& x,
                                                  const ModelPoint<F>& y, LatticeKind kind) {
    if (!rs.crystallographic()) throw std::invalid_argument("segment enumeration needs a discrete lattice");
    if constexpr (!std::is_same_v<F, Rational>) {
        throw std::invalid_argument("segment enumeration needs rational coordinates");
    } else {
    // |(z - x)_i| = |(z - x, w_i^v)| <= d(x, y) * sum_j c_ij (a_j, a_j)/2 where w_i^v = sum_j c_ij a_j
    F d = distance(rs, x, y);
    F bound(0);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        F s(0);
        auto w = rs.fundamental_coweight(i);
        for (std::size_t j = 0; j < rs.rank(); ++j) s += abs_value(w[j]) * rs.gram(j, j) / F(2);
        bound = std::max(bound, s);
    }
    ModelPoint<F> lo = x, hi = x;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        lo[i] = x[i] - d * bound;
        hi[i] = x[i] + d * bound;
    }
    std::vector<ModelPoint<F>> out;
    for (auto& z : detail::lattice_points_in_box(lattice_basis(rs, kind), x, lo, hi))
        if (in_segment(rs, x, y, z)) out.push_back(z);
    return out;
    }
}

/// The hull query A^Q(x): orbit generator, its dominant representative and
/// the translation lattice T (coroot lattice unless a basis is supplied).
template <OrderedField F>
struct HullQuery {
    ModelPoint<F> x;
    ModelPoint<F> x_plus;
    std::optional<std::vector<ModelPoint<F>>> lattice;

    static HullQuery make(const RootSystem<F>& rs, ModelPoint<F> x,
                          std::optional<std::vector<ModelPoint<F>>> lattice = std::nullopt) {
        if (!lattice && !rs.crystallographic())
            throw std::invalid_argument("HullQuery: non-crystallographic systems need an explicit lattice");
        auto xp = rs.dominant_rep(x).first;
        return {std::move(x), std::move(xp), std::move(lattice)};
    }
};

/// Nonnegative simple-root coefficients.
template <OrderedGroup L>
bool in_positive_cone(const ModelPoint<L>& v) {
    for (const auto& c : v.coords)
        if (c < L{}) return false;
    return true;
}

template <OrderedField F>
bool in_lattice(const RootSystem<F>& rs, const HullQuery<F>& q, const ModelPoint<F>& v) {
    if (!q.lattice) return rs.coroot_lattice_member(v);
    const auto& basis = *q.lattice;
    Matrix<F> b(v.rank());
    for (std::size_t j = 0; j < v.rank(); ++j)
        for (std::size_t i = 0; i < v.rank(); ++i) b(i, j) = basis[j][i];
    auto c = b.inverse().apply(v);
    for (const auto& ci : c.coords) {
        if constexpr (std::is_same_v<F, Rational>) {
            if (!ci.is_integer()) return false;
        } else {
            if (ci.poly().degree() > 0 || !(ci.is_zero() || ci.poly().lead().is_integer())) return false;
        }
    }
    return true;
}

/// y in A^Q(x) iff x^+ - y^+ lies in the positive cone and x - y in T.
template <OrderedField F>
bool in_AQ(const RootSystem<F>& rs, const ModelPoint<F>& y, const HullQuery<F>& q) {
    auto yp = rs.dominant_rep(y).first;
    return in_positive_cone(q.x_plus - yp) && in_lattice(rs, q, q.x - y);
}

/// Literal intersection test: y in w(x^+ - (C^+ cap T)) for every w in W.
template <OrderedField F>
bool in_weyl_intersection(const RootSystem<F>& rs, const ModelPoint<F>& y, const HullQuery<F>& q) {
    for (const auto& w : rs.weyl_group()) {
        auto v = q.x_plus - w.matrix.inverse().apply(y);
        if (!in_positive_cone(v) || !in_lattice(rs, q, v)) return false;
    }
    return true;
}

/// Coordinate box spanned by the W-orbit of x.
template <OrderedField F>
std::pair<ModelPoint<F>, ModelPoint<F>> orbit_box(const RootSystem<F>& rs, const ModelPoint<F>& x) {
    auto orbit = rs.weyl_orbit(x);
    ModelPoint<F> lo = *orbit.begin(), hi = lo;
    for (const auto& p : orbit)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    return {lo, hi};
}

/// Lattice points of the coset x + Q(R^v) inside the orbit box.
template <OrderedField F>
std::vector<ModelPoint<F>> AQ_candidates(const RootSystem<F>& rs, const ModelPoint<F>& x) {
    rs.require_crystallographic("AQ_candidates");
    auto [lo, hi] = orbit_box(rs, x);
    return detail::lattice_points_in_box(lattice_basis(rs, LatticeKind::coroot), x, lo, hi);
}

/// A^Q(x), canonically sorted.
template <OrderedField F>
std::vector<ModelPoint<F>> enumerate_AQ(const RootSystem<F>& rs, const HullQuery<F>& q) {
    rs.require_crystallographic("enumerate_AQ");
    std::set<ModelPoint<F>> out;
    for (auto& c : AQ_candidates(rs, q.x))
        if (in_AQ(rs, c, q)) out.insert(c);
    return {out.begin(), out.end()};
}

template <OrderedField F>
std::vector<ModelPoint<F>> enumerate_AQ(const RootSystem<F>& rs, const ModelPoint<F>& x) {
    return enumerate_AQ(rs, HullQuery<F>::make(rs, x));
}

/// Which directions bound the dual half-apartments.
enum class DualReading {
    simple_only,  // (., w_a^v) for a in B
    weyl_closed   // (., w w_a^v) for a in B, w in W
};

template <OrderedField F>
std::vector<ModelPoint<F>> dual_directions(const RootSystem<F>& rs, DualReading reading) {
    std::set<ModelPoint<F>> dirs;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto c = rs.fundamental_coweight(i);
        if (reading == DualReading::simple_only)
            dirs.insert(c);
        else
            for (const auto& w : rs.weyl_group()) dirs.insert(w(c));
    }
    return {dirs.begin(), dirs.end()};
}

/// y lies in every dual half-apartment that contains the finite set `points`.
template <OrderedField F>
bool dual_hull_oracle(const RootSystem<F>& rs, const std::vector<ModelPoint<F>>& points, const ModelPoint<F>& y,
                      DualReading reading = DualReading::weyl_closed) {
    if (points.empty()) return false;
    for (const auto& d : dual_directions(rs, reading)) {
        F lo = rs.inner(points.front(), d), hi = lo;
        for (const auto& p : points) {
            F v = rs.inner(p, d);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        F v = rs.inner(y, d);
        if (v < lo || hi < v) return false;
    }
    return true;
}

/// Special vertices are the points with (x, a) integral for all roots a.
template <OrderedField F>
bool is_special_vertex(const RootSystem<F>& rs, const ModelPoint<F>& x) {
    return rs.coweight_lattice_member(x);
}

/// 1 + number of walls H_{a,k} = {(a, .) = k}, a > 0, k integral, strictly
/// separating the special vertices x and y.
template <OrderedField F>
std::int64_t gallery_distance(const RootSystem<F>& rs, const ModelPoint<F>& x, const ModelPoint<F>& y) {
    rs.require_crystallographic("gallery_distance");
    if (!is_special_vertex(rs, x) || !is_special_vertex(rs, y))
        throw std::invalid_argument("gallery_distance: inputs must be special vertices");
    std::int64_t n = 1;
    for (const auto& a : rs.positive_roots()) {
        F diff = abs_value(rs.inner(y, a) - rs.inner(x, a));
        if (diff > F(0)) n += diff.num() - 1;
    }
    return n;
}

}  // namespace weylkit
