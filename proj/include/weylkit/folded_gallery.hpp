#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylkit/caps.hpp"
#include "weylkit/model_space.hpp"

namespace weylkit {

/// Affine map z -> M z + b in simple-root coordinates.
template <OrderedField F>
struct AffineMap {
    Matrix<F> m;
    ModelPoint<F> b;

    static AffineMap identity(std::size_t n) { return {Matrix<F>::identity(n), ModelPoint<F>::zero(n)}; }
    [[nodiscard]] ModelPoint<F> operator()(const ModelPoint<F>& z) const { return m.apply(z) + b; }
    /// (this o o)(z) = this(o(z))
    [[nodiscard]] AffineMap compose(const AffineMap& o) const { return {m * o.m, m.apply(o.b) + b}; }
    friend bool operator==(const AffineMap& x, const AffineMap& y) { return x.m == y.m && x.b == y.b; }
    friend auto operator<=>(const AffineMap& x, const AffineMap& y) {
        if (auto c = x.m <=> y.m; c != 0) return c;
        return x.b <=> y.b;
    }
};

/// Alcove geometry of the affine Weyl group of a crystallographic system.
///
/// Walls are H_{a,k} = {(a, .) = k}. The fundamental alcove is
/// {(a_i, .) >= 0, (theta, .) <= 1}; its walls are H_i = H_{a_i,0} for
/// i = 1..n and H_0 = H_{theta,1}, with s_0 = r_{theta,1}.
template <OrderedField F>
class AlcoveGeometry {
public:
    explicit AlcoveGeometry(const RootSystem<F>& rs) : rs_(&rs) {
        rs.require_crystallographic("AlcoveGeometry");
        theta_ = rs.highest_root();
        const std::size_t n = rs.rank();
        gens_.push_back({rs.reflect_matrix(theta_), rs.coroot(theta_) /* (theta,theta) = 2 */});
        for (std::size_t i = 0; i < n; ++i) gens_.push_back({rs.simple_reflection_matrix(i), ModelPoint<F>::zero(n)});
        // vertices 0 and w_i^v / m_i, m_i the theta-coefficient of a_i
        vertices_.push_back(ModelPoint<F>::zero(n));
        for (std::size_t i = 0; i < n; ++i) vertices_.push_back(scale(F(1) / theta_[i], rs.fundamental_coweight(i)));
    }

    [[nodiscard]] const RootSystem<F>& root_system() const { return *rs_; }
    [[nodiscard]] const Root<F>& theta() const { return theta_; }
    /// Affine simple reflection s_t, t = 0..n.
    [[nodiscard]] const AffineMap<F>& generator(int t) const { return gens_.at(static_cast<std::size_t>(t)); }
    /// Vertex of the fundamental alcove opposite to wall H_t.
    [[nodiscard]] const ModelPoint<F>& vertex(int t) const { return vertices_.at(static_cast<std::size_t>(t)); }
    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }

    /// Interior point sum_t l_t vertex(t) with weights l_t = c_t / sum(c).
    [[nodiscard]] ModelPoint<F> interior_point(const std::vector<std::int64_t>& c) const {
        F total(0);
        for (auto v : c) total += F(v);
        ModelPoint<F> p = ModelPoint<F>::zero(rs_->rank());
        for (std::size_t t = 0; t < vertices_.size(); ++t) p = p + scale(F(c[t]) / total, vertices_[t]);
        return p;
    }

    /// The wall w(H_t) as (beta, k) with beta a positive root.
    [[nodiscard]] std::pair<Root<F>, F> wall_image(const AffineMap<F>& w, int t) const {
        Root<F> g = t == 0 ? theta_ : rs_->simple_root(static_cast<std::size_t>(t - 1));
        F c = t == 0 ? F(1) : F(0);
        Root<F> beta = w.m.apply(g);
        F k = c + rs_->inner(w.b, beta);
        if (!rs_->is_positive_root(beta)) {
            beta = -beta;
            k = -k;
        }
        return {beta, k};
    }

    /// Type t with w^{-1}(H_{beta,k}) = H_t, or -1 if it is no wall of w(c_f).
    [[nodiscard]] int wall_type(const AffineMap<F>& w, const Root<F>& beta, const F& k) const {
        for (int t = 0; t <= static_cast<int>(rs_->rank()); ++t) {
            auto [b2, k2] = wall_image(w, t);
            if (b2 == beta && k2 == k) return t;
        }
        return -1;
    }

private:
    const RootSystem<F>* rs_;
    Root<F> theta_;
    std::vector<AffineMap<F>> gens_;
    std::vector<ModelPoint<F>> vertices_;
};

/// Type of a gallery: the crossing types t_1..t_N, the start chamber u
/// (the first alcove is u(c_f)) and the vertex of c_f whose image in the
/// last alcove is the target.
template <OrderedField F>
struct GalleryType {
    std::vector<int> steps;
    AffineMap<F> start;
    ModelPoint<F> target_vertex;
};

/// A gallery of a given type with optional folds.
template <OrderedField F>
struct FoldedGallery {
    std::vector<int> gallery_type;
    std::vector<bool> fold_mask;
    std::vector<AffineMap<F>> alcove_track;  // c_0 .. c_N as w_k(c_f)
    ModelPoint<F> weight;
};

/// Minimal gallery from the alcove at 0 in the chamber of x to an alcove
/// with vertex x. Its length is gallery_distance(0, x) - 1.
template <OrderedField F>
FoldedGallery<F> minimal_gallery(const AlcoveGeometry<F>& geo, const ModelPoint<F>& x, GalleryType<F>* type_out = nullptr) {
    const auto& rs = geo.root_system();
    if (!is_special_vertex(rs, x)) throw std::invalid_argument("minimal_gallery: x must be a special vertex");
    const std::size_t n = rs.rank();
    auto [xp, u] = rs.dominant_rep(x);  // u(x) = x^+, so x lies in u^{-1} C_f
    AffineMap<F> start{u.matrix.inverse(), ModelPoint<F>::zero(n)};

    for (std::int64_t attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::int64_t> c;
        for (std::size_t t = 0; t <= n; ++t) c.push_back(1000 + 37 * static_cast<std::int64_t>(t) * (attempt + 1) + attempt * attempt);
        ModelPoint<F> p0 = start(geo.interior_point(c));
        struct Crossing {
            F s;
            Root<F> beta;
            F k;
        };
        std::vector<Crossing> cross;
        for (const auto& beta : rs.positive_roots()) {
            F a = rs.inner(p0, beta), b = rs.inner(x, beta);
            if (a == b) continue;
            F lo = std::min(a, b), hi = std::max(a, b);
            for (std::int64_t k = lo.floor(); F(k) < hi; ++k) {
                F kk(k);
                if (!(kk > lo) || kk == b) continue;
                cross.push_back({(kk - a) / (b - a), beta, kk});
            }
        }
        std::sort(cross.begin(), cross.end(), [](const Crossing& l, const Crossing& r) { return l.s < r.s; });
        bool tie = false;
        for (std::size_t i = 1; i < cross.size(); ++i) tie = tie || cross[i].s == cross[i - 1].s;
        if (tie) continue;

        FoldedGallery<F> g;
        AffineMap<F> w = start;
        g.alcove_track.push_back(w);
        for (const auto& cr : cross) {
            int t = geo.wall_type(w, cr.beta, cr.k);
            if (t < 0) throw std::logic_error("minimal_gallery: crossing is not a wall of the current alcove");
            w = w.compose(geo.generator(t));
            g.gallery_type.push_back(t);
            g.fold_mask.push_back(false);
            g.alcove_track.push_back(w);
        }
        // the target is a vertex of the last alcove
        ModelPoint<F> v;
        bool found = false;
        for (std::size_t t = 0; t < geo.vertex_count() && !found; ++t)
            if (w(geo.vertex(static_cast<int>(t))) == x) {
                v = geo.vertex(static_cast<int>(t));
                found = true;
            }
        if (!found) throw std::logic_error("minimal_gallery: x is not a vertex of the final alcove");
        g.weight = x;
        if (type_out) *type_out = {g.gallery_type, start, v};
        return g;
    }
    throw std::runtime_error("minimal_gallery: no generic base point found");
}

template <OrderedField F>
GalleryType<F> gallery_type_to(const AlcoveGeometry<F>& geo, const ModelPoint<F>& x) {
    GalleryType<F> t;
    minimal_gallery(geo, x, &t);
    return t;
}

/// Visits every positively folded gallery of type t with source 0: the first
/// alcove ranges over all |W| alcoves at 0 and each step crosses or folds.
/// A fold at w(H_t) = H_{beta,k} (beta > 0) is positive iff the retained
/// alcove lies in {(beta, .) >= k}.
template <OrderedField F>
void for_each_positively_folded(const AlcoveGeometry<F>& geo, const GalleryType<F>& type,
                                const std::function<void(const FoldedGallery<F>&)>& visit,
                                std::size_t cap = enumeration_cap(1000000)) {
    const auto& rs = geo.root_system();
    const std::size_t N = type.steps.size();
    const ModelPoint<F> probe = geo.interior_point(std::vector<std::int64_t>(rs.rank() + 1, 1));
    std::size_t states = 0;
    FoldedGallery<F> g;
    g.gallery_type = type.steps;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (++states > cap) throw CapExceeded("folded galleries: more than " + std::to_string(cap) + " states");
        const AffineMap<F> w = g.alcove_track.back();
        if (k == N) {
            g.weight = w(type.target_vertex);
            visit(g);
            return;
        }
        int t = type.steps[k];
        g.alcove_track.push_back(w.compose(geo.generator(t)));
        g.fold_mask.push_back(false);
        rec(k + 1);
        g.alcove_track.pop_back();
        g.fold_mask.pop_back();
        auto [beta, level] = geo.wall_image(w, t);
        if (rs.inner(w(probe), beta) > level) {
            g.alcove_track.push_back(w);
            g.fold_mask.push_back(true);
            rec(k + 1);
            g.alcove_track.pop_back();
            g.fold_mask.pop_back();
        }
    };
    for (const auto& u : rs.weyl_group()) {
        g.alcove_track = {AffineMap<F>{u.matrix, ModelPoint<F>::zero(rs.rank())}};
        g.fold_mask.clear();
        rec(0);
    }
}

template <OrderedField F>
std::vector<ModelPoint<F>> folded_gallery_endpoints(const AlcoveGeometry<F>& geo, const GalleryType<F>& type,
                                                    std::size_t cap = enumeration_cap(1000000)) {
    std::set<ModelPoint<F>> out;
    for_each_positively_folded<F>(geo, type, [&](const FoldedGallery<F>& g) { out.insert(g.weight); }, cap);
    return {out.begin(), out.end()};
}

}  // namespace weylkit
