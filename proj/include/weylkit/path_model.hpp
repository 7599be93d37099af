#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylkit/caps.hpp"
#include "weylkit/model_space.hpp"

namespace weylkit {

/// Piecewise-linear path from 0, stored by its corner points.
///
/// Normal form: no repeated consecutive vertices and no corner between two
/// positively proportional segments. Breakpoint times are proportional to
/// the cumulative model-space distance, which fixes the parametrization.
template <OrderedField F>
class PLPath {
public:
    explicit PLPath(std::size_t rank) : vertices_{ModelPoint<F>::zero(rank)} {}
    explicit PLPath(std::vector<ModelPoint<F>> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty() || !vertices_.front().is_zero()) throw std::invalid_argument("PLPath must start at 0");
        normalize();
    }
    static PLPath straight(const ModelPoint<F>& end) { return PLPath({ModelPoint<F>::zero(end.rank()), end}); }

    [[nodiscard]] const std::vector<ModelPoint<F>>& vertices() const { return vertices_; }
    [[nodiscard]] std::size_t rank() const { return vertices_.front().rank(); }
    [[nodiscard]] const ModelPoint<F>& endpoint() const { return vertices_.back(); }
    [[nodiscard]] std::size_t segment_count() const { return vertices_.size() - 1; }

    /// (t_k, pi(t_k)) with 0 = t_0 < ... < t_m = 1.
    [[nodiscard]] std::vector<std::pair<F, ModelPoint<F>>> breakpoints(const RootSystem<F>& rs) const {
        std::vector<std::pair<F, ModelPoint<F>>> out;
        if (vertices_.size() == 1) {
            out.emplace_back(F(0), vertices_[0]);
            out.emplace_back(F(1), vertices_[0]);
            return out;
        }
        std::vector<F> cum{F(0)};
        for (std::size_t i = 1; i < vertices_.size(); ++i) cum.push_back(cum.back() + distance(rs, vertices_[i - 1], vertices_[i]));
        for (std::size_t i = 0; i < vertices_.size(); ++i) out.emplace_back(cum[i] / cum.back(), vertices_[i]);
        return out;
    }

    friend bool operator==(const PLPath& a, const PLPath& b) { return a.vertices_ == b.vertices_; }
    friend auto operator<=>(const PLPath& a, const PLPath& b) { return a.vertices_ <=> b.vertices_; }

private:
    static bool positively_proportional(const ModelPoint<F>& u, const ModelPoint<F>& v) {
        std::optional<F> ratio;
        for (std::size_t i = 0; i < u.rank(); ++i) {
            if (u[i] == F(0) || v[i] == F(0)) {
                if (u[i] != v[i]) return false;
                continue;
            }
            F r = v[i] / u[i];
            if (ratio && r != *ratio) return false;
            ratio = r;
        }
        return ratio && *ratio > F(0);
    }

    void normalize() {
        std::vector<ModelPoint<F>> out{vertices_.front()};
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            if (vertices_[i] == out.back()) continue;
            if (out.size() >= 2 &&
                positively_proportional(out.back() - out[out.size() - 2], vertices_[i] - out.back()))
                out.back() = vertices_[i];
            else
                out.push_back(vertices_[i]);
        }
        vertices_ = std::move(out);
    }

    std::vector<ModelPoint<F>> vertices_;
};

/// pi1 followed by the translate of pi2 to pi1(1).
template <OrderedField F>
PLPath<F> concat(const PLPath<F>& a, const PLPath<F>& b) {
    auto v = a.vertices();
    for (std::size_t i = 1; i < b.vertices().size(); ++i) v.push_back(a.endpoint() + b.vertices()[i]);
    return PLPath<F>(std::move(v));
}

/// Height function h(t) = (pi(t), a) sampled at the corners. With (a, a) = 2
/// this is <pi(t), a^v>; in general a drop of 1 is exactly one a^v-step.
template <OrderedField F>
std::vector<F> height_values(const RootSystem<F>& rs, const PLPath<F>& p, std::size_t i) {
    std::vector<F> h;
    for (const auto& v : p.vertices()) h.push_back(rs.inner(v, rs.simple_root(i)));
    return h;
}

/// Littelmann root operator e_{a_i}; nullopt when the minimum of h exceeds -1.
///
/// t1 is the first corner attaining the minimum n; t0 is the first time h
/// drops below n + 1. On [t0, t1] exactly the stretches that reach a new
/// running minimum are reflected by s_{a_i}; everything else is translated.
template <OrderedField F>
std::optional<PLPath<F>> root_operator_e(const RootSystem<F>& rs, const PLPath<F>& p, std::size_t i) {
    const auto& v = p.vertices();
    auto h = height_values(rs, p, i);
    F n = *std::min_element(h.begin(), h.end());
    if (n > F(-1)) return std::nullopt;
    std::size_t k1 = static_cast<std::size_t>(std::min_element(h.begin(), h.end()) - h.begin());
    const auto a = rs.simple_root(i);
    const F top = n + F(1);

    std::vector<ModelPoint<F>> out{v[0]};
    ModelPoint<F> cur = v[0];
    auto emit = [&](const ModelPoint<F>& step) {
        cur = cur + step;
        out.push_back(cur);
    };
    // point on segment [p, q] where h takes value target, with h(p) != h(q)
    auto cut = [&](const ModelPoint<F>& p0, const ModelPoint<F>& q0, const F& hp, const F& hq, const F& target) {
        return p0 + scale((target - hp) / (hq - hp), q0 - p0);
    };

    bool started = false;  // reached t0
    F running = top;
    for (std::size_t s = 1; s < v.size(); ++s) {
        const auto& A = v[s - 1];
        const auto& B = v[s];
        const F ha = h[s - 1], hb = h[s];
        if (s - 1 >= k1) {  // tail after t1
            emit(B - A);
            continue;
        }
        ModelPoint<F> from = A;
        F hfrom = ha;
        if (!started) {
            if (!(hb < top)) {
                emit(B - A);
                continue;
            }
            // t0 lies on this segment (possibly at A)
            started = true;
            if (ha > top) {
                ModelPoint<F> m = cut(A, B, ha, hb, top);
                emit(m - A);
                from = m;
                hfrom = top;
            }
        }
        if (!(hb < running)) {
            emit(B - from);
            continue;
        }
        if (hfrom > running) {
            ModelPoint<F> m = cut(from, B, hfrom, hb, running);
            emit(m - from);
            from = m;
        }
        emit(rs.reflect(a, B - from));
        running = hb;
    }
    return PLPath<F>(std::move(out));
}

/// Least set of paths containing p and closed under every e_{a_i}.
template <OrderedField F>
std::set<PLPath<F>> positive_fold_closure(const RootSystem<F>& rs, const PLPath<F>& p,
                                          std::size_t cap = enumeration_cap(100000)) {
    std::set<PLPath<F>> seen{p};
    std::vector<PLPath<F>> todo{p};
    while (!todo.empty()) {
        auto cur = std::move(todo.back());
        todo.pop_back();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            auto next = root_operator_e(rs, cur, i);
            if (!next) continue;
            if (seen.insert(*next).second) {
                if (seen.size() > cap)
                    throw CapExceeded("positive_fold_closure: more than " + std::to_string(cap) + " paths");
                todo.push_back(std::move(*next));
            }
        }
    }
    return seen;
}

template <OrderedField F>
std::vector<ModelPoint<F>> closure_endpoints(const std::set<PLPath<F>>& closure) {
    std::set<ModelPoint<F>> e;
    for (const auto& p : closure) e.insert(p.endpoint());
    return {e.begin(), e.end()};
}

/// Trace of the descent y_0 = y, y_k = y_{k-1} - m_k a^v_{i_k}.
template <OrderedField F>
struct ParkinsonRamTrace {
    std::vector<int> word;  // i_1 .. i_n, w0 = s_{i_1} ... s_{i_n}
    std::vector<std::int64_t> m;
    std::vector<ModelPoint<F>> y;  // y_0 .. y_n
    PLPath<F> path;
};

/// Folds the straight path to w0 x into a path ending at y.
///
/// Throws std::invalid_argument if y is outside A^Q(x) or the word is not a
/// reduced word for w0, and std::domain_error if y_n != w0 x or some e-step
/// is unexpectedly undefined.
template <OrderedField F>
ParkinsonRamTrace<F> parkinson_ram_fold(const RootSystem<F>& rs, const ModelPoint<F>& x, const ModelPoint<F>& y,
                                        std::vector<int> w0_word) {
    if (!rs.is_dominant(x)) throw std::invalid_argument("parkinson_ram_fold: x must be dominant");
    auto q = HullQuery<F>::make(rs, x);
    if (!in_AQ(rs, y, q)) throw std::invalid_argument("parkinson_ram_fold: y is not in A^Q(x)");
    const auto& w0 = rs.longest_element();
    if (w0_word.size() != w0.length() || !(rs.from_word(w0_word).matrix == w0.matrix))
        throw std::invalid_argument("parkinson_ram_fold: not a reduced word for w0");

    ParkinsonRamTrace<F> tr{w0_word, {}, {y}, PLPath<F>(rs.rank())};
    for (int ik : w0_word) {
        auto cv = rs.coroot(rs.simple_root(static_cast<std::size_t>(ik)));
        std::int64_t m = 0;
        // the line meets the convex set A^Q(x) in a contiguous run through m = 0
        while (in_AQ(rs, tr.y.back() - scale(F(m + 1), cv), q)) ++m;
        tr.m.push_back(m);
        tr.y.push_back(tr.y.back() - scale(F(m), cv));
    }
    auto target = w0(x);
    if (!(tr.y.back() == target)) throw std::domain_error("parkinson_ram_fold: y_n differs from w0 x");

    PLPath<F> path = PLPath<F>::straight(target);
    for (std::size_t k = w0_word.size(); k-- > 0;) {
        for (std::int64_t r = 0; r < tr.m[k]; ++r) {
            auto next = root_operator_e(rs, path, static_cast<std::size_t>(w0_word[k]));
            if (!next)
                throw std::domain_error("parkinson_ram_fold: e_" + std::to_string(w0_word[k] + 1) +
                                        " undefined at step " + std::to_string(k + 1));
            path = std::move(*next);
        }
    }
    if (!(path.endpoint() == y)) throw std::domain_error("parkinson_ram_fold: endpoint differs from y");
    tr.path = std::move(path);
    return tr;
}

}  // namespace weylkit
