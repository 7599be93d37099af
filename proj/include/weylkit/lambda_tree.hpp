#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylkit/scalars.hpp"

namespace weylkit {

/// Ends are indices 0..n-1 into a label list; labels are unique.
using EndId = std::size_t;

/// A Lambda-valued function on ordered quadruples of pairwise distinct ends.
template <OrderedGroup L>
class ProjectiveValuation {
public:
    ProjectiveValuation() = default;
    explicit ProjectiveValuation(std::vector<std::string> labels)
        : labels_(std::move(labels)), n_(labels_.size()), table_(n_ * n_ * n_ * n_) {
        if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n_)
            throw std::invalid_argument("ProjectiveValuation: duplicate end labels");
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(EndId e) const { return labels_.at(e); }
    [[nodiscard]] EndId id(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw std::invalid_argument("unknown end '" + label + "'");
        return static_cast<EndId>(it - labels_.begin());
    }

    [[nodiscard]] const L& operator()(EndId a, EndId b, EndId c, EndId d) const { return table_[index(a, b, c, d)]; }
    void set(EndId a, EndId b, EndId c, EndId d, L v) { table_[index(a, b, c, d)] = std::move(v); }

    /// Calls f(a, b, c, d) for every ordered quadruple of distinct ends.
    template <class Fn>
    void for_each_quadruple(Fn&& f) const {
        for (EndId a = 0; a < n_; ++a)
            for (EndId b = 0; b < n_; ++b)
                for (EndId c = 0; c < n_; ++c)
                    for (EndId d = 0; d < n_; ++d)
                        if (distinct(a, b, c, d)) f(a, b, c, d);
    }

    static bool distinct(EndId a, EndId b, EndId c, EndId d) {
        return a != b && a != c && a != d && b != c && b != d && c != d;
    }

    friend bool operator==(const ProjectiveValuation&, const ProjectiveValuation&) = default;

private:
    [[nodiscard]] std::size_t index(EndId a, EndId b, EndId c, EndId d) const {
        if (!distinct(a, b, c, d) || std::max({a, b, c, d}) >= n_)
            throw std::invalid_argument("ProjectiveValuation: ends must be pairwise distinct and known");
        return ((a * n_ + b) * n_ + c) * n_ + d;
    }

    std::vector<std::string> labels_;
    std::size_t n_ = 0;
    std::vector<L> table_;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<EndId> ends;
    std::string detail;
};

struct AxiomReport {
    std::size_t checked = 0;
    std::vector<AxiomViolation> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

namespace detail {
inline std::string quad_text(const std::vector<std::string>& lab, std::initializer_list<EndId> e) {
    std::string s;
    for (auto x : e) s += (s.empty() ? "" : ",") + lab[x];
    return s;
}
}  // namespace detail

/// Exhaustive scan of (PV1)-(PV3); violations are data.
template <OrderedGroup L>
AxiomReport check_pv(const ProjectiveValuation<L>& w) {
    AxiomReport rep;
    const auto& lab = w.labels();
    const L zero{};
    w.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) {
        ++rep.checked;
        const L& k = w(a, b, c, d);
        if (!(w(c, d, a, b) == k) || !(w(a, b, d, c) == -k))
            rep.violations.push_back({"PV1", {a, b, c, d}, "w(" + detail::quad_text(lab, {a, b, c, d}) + ") = " + k.str()});
        if (k > zero && (!(w(a, d, c, b) == k) || !(w(a, c, b, d) == zero)))
            rep.violations.push_back({"PV2", {a, b, c, d}, "w(" + detail::quad_text(lab, {a, b, c, d}) + ") = " + k.str()});
    });
    const std::size_t n = w.size();
    for (EndId a = 0; a < n; ++a)
        for (EndId b = 0; b < n; ++b)
            for (EndId c = 0; c < n; ++c)
                for (EndId d = 0; d < n; ++d)
                    for (EndId e = 0; e < n; ++e) {
                        if (!ProjectiveValuation<L>::distinct(a, b, c, d) || e == a || e == b || e == c || e == d)
                            continue;
                        ++rep.checked;
                        if (!(w(a, b, d, e) + w(b, c, d, e) == w(a, c, d, e)))
                            rep.violations.push_back({"PV3", {a, b, c, d, e}, detail::quad_text(lab, {a, b, c, d, e})});
                    }
    return rep;
}

/// Which of the four mutually exclusive configurations (1..4) holds for
/// a against (a1, a2, a3). Throws std::invalid_argument if not exactly one.
template <OrderedGroup L>
int three_point_case(const ProjectiveValuation<L>& w, EndId a, EndId a1, EndId a2, EndId a3) {
    const L zero{};
    bool c1 = w(a1, a, a2, a3) > zero, c2 = w(a2, a, a3, a1) > zero, c3 = w(a3, a, a1, a2) > zero;
    bool c4 = true;
    const EndId t[3] = {a1, a2, a3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (i != j && j != k && i != k) c4 = c4 && w(t[i], a, t[j], t[k]) == zero;
    int count = int(c1) + int(c2) + int(c3) + int(c4);
    if (count != 1) throw std::invalid_argument("three_point_case: " + std::to_string(count) + " cases hold; invalid valuation");
    return c1 ? 1 : c2 ? 2 : c3 ? 3 : 4;
}

/// Point <end, height> of an Alperin-Bass tree.
template <OrderedGroup L>
struct TreePoint {
    EndId end = 0;
    L height{};
    friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

/// (E, ^) with ^ : E x E -> Lambda u {+inf}, plus the base triple it came from.
template <OrderedGroup L>
class RootedTreeDatum {
public:
    using W = Extended<L>;

    RootedTreeDatum() = default;
    RootedTreeDatum(std::vector<std::string> labels, std::array<EndId, 3> base = {0, 1, 2})
        : labels_(std::move(labels)), n_(labels_.size()), wedge_(n_ * n_, W(L{})), base_(base) {
        for (EndId a = 0; a < n_; ++a) wedge_[a * n_ + a] = W::infinity();
        order_.resize(n_);
        for (EndId e = 0; e < n_; ++e) order_[e] = e;
        std::sort(order_.begin(), order_.end(), [&](EndId x, EndId y) { return labels_[x] < labels_[y]; });
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::array<EndId, 3>& base_triple() const { return base_; }
    [[nodiscard]] const W& wedge(EndId a, EndId b) const { return wedge_.at(a * n_ + b); }
    /// Sets a ^ b and b ^ a.
    void set_wedge(EndId a, EndId b, W v) {
        wedge_.at(a * n_ + b) = v;
        wedge_.at(b * n_ + a) = std::move(v);
    }
    /// a ^ b for distinct ends, which is always finite.
    [[nodiscard]] const L& meet(EndId a, EndId b) const { return wedge(a, b).value(); }

    /// (RT0)-(RT2) over all pairs and triples.
    [[nodiscard]] AxiomReport check() const {
        AxiomReport rep;
        const W zero(L{});
        for (EndId x = 0; x < n_; ++x)
            for (EndId y = 0; y < n_; ++y) {
                ++rep.checked;
                if (wedge(x, y) < zero) rep.violations.push_back({"RT0", {x, y}, labels_[x] + "^" + labels_[y]});
                if (!(wedge(x, y) == wedge(y, x))) rep.violations.push_back({"RT1", {x, y}, labels_[x] + "^" + labels_[y]});
                for (EndId z = 0; z < n_; ++z)
                    if (wedge(x, z) < std::min(wedge(x, y), wedge(y, z)))
                        rep.violations.push_back({"RT2", {x, y, z}, detail::quad_text(labels_, {x, y, z})});
            }
        return rep;
    }

    /// Same point with the least label among equivalent ends.
    [[nodiscard]] TreePoint<L> canonical(TreePoint<L> p) const {
        if (p.height < L{}) throw std::invalid_argument("TreePoint: negative height");
        for (EndId f : order_)
            if (wedge(f, p.end) >= W(p.height)) return {f, p.height};
        return p;
    }

    /// Alperin-Bass pseudo-distance of raw pairs.
    [[nodiscard]] L distance(const TreePoint<L>& p, const TreePoint<L>& q) const {
        const W& w = wedge(p.end, q.end);
        if (W(p.height) <= w && W(q.height) <= w) return abs_value(p.height - q.height);
        const L& m = w.value();
        return abs_value(p.height - m) + abs_value(q.height - m);
    }

    /// kappa(a, b, c): the vertex where the largest of the three meets sits.
    [[nodiscard]] TreePoint<L> branch_point(EndId a, EndId b, EndId c) const {
        require_distinct(a, b, c);
        const L &ab = meet(a, b), &ac = meet(a, c), &bc = meet(b, c);
        if (ab >= ac && ab >= bc) return canonical({a, ab});
        if (ac >= bc) return canonical({a, ac});
        return canonical({b, bc});
    }

    /// Coordinate on the line [ab] increasing toward b, with
    /// u(<a, l>) = -l and u(<b, l>) = l - 2 a^b.
    [[nodiscard]] L line_coordinate(const TreePoint<L>& p, EndId a, EndId b) const {
        const L& w = meet(a, b);
        if (p.height >= w && wedge(p.end, a) >= W(p.height)) return -p.height;
        if (p.height >= w && wedge(p.end, b) >= W(p.height)) return p.height - w - w;
        throw std::logic_error("line_coordinate: point is not on the line");
    }

    /// Signed distance from kappa(a,b,c) to kappa(a,b,d) along [ab], toward b positive.
    [[nodiscard]] L canonical_valuation(EndId a, EndId b, EndId c, EndId d) const {
        if (!ProjectiveValuation<L>::distinct(a, b, c, d))
            throw std::invalid_argument("canonical_valuation: ends must be pairwise distinct");
        return line_coordinate(branch_point(a, b, d), a, b) - line_coordinate(branch_point(a, b, c), a, b);
    }

    [[nodiscard]] ProjectiveValuation<L> valuation() const {
        ProjectiveValuation<L> w(labels_);
        w.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) { w.set(a, b, c, d, canonical_valuation(a, b, c, d)); });
        return w;
    }

    friend bool operator==(const RootedTreeDatum& x, const RootedTreeDatum& y) {
        return x.labels_ == y.labels_ && x.wedge_ == y.wedge_ && x.base_ == y.base_;
    }

private:
    static void require_distinct(EndId a, EndId b, EndId c) {
        if (a == b || a == c || b == c) throw std::invalid_argument("branch_point: ends must be pairwise distinct");
    }

    std::vector<std::string> labels_;
    std::size_t n_ = 0;
    std::vector<W> wedge_;
    std::array<EndId, 3> base_{};
    std::vector<EndId> order_;  // ends by label
};

/// Wedge table from omega and a base triple (a1, a2, a3). For a outside the
/// triple, (i, j, k) is the rotation of (1, 2, 3) maximizing w(a_i, a; a_j, a_k),
/// and a ^ b = max(0, w(a_i, a; a_j, b)) unless b is a_i or a_j.
template <OrderedGroup L>
RootedTreeDatum<L> datum_from_valuation(const ProjectiveValuation<L>& w, std::array<EndId, 3> base) {
    const std::size_t n = w.size();
    if (n < 3 || base[0] == base[1] || base[0] == base[2] || base[1] == base[2] || *std::max_element(base.begin(), base.end()) >= n)
        throw std::invalid_argument("datum_from_valuation: base triple must be three distinct ends");
    if (auto rep = check_pv(w); !rep.ok())
        throw std::invalid_argument("datum_from_valuation: not a projective valuation (" + rep.violations.front().axiom + " at " +
                                    rep.violations.front().detail + ")");
    RootedTreeDatum<L> t(w.labels(), base);
    auto in_base = [&](EndId e) { return e == base[0] || e == base[1] || e == base[2]; };
    std::vector<std::array<EndId, 3>> rot(n);
    for (EndId a = 0; a < n; ++a) {
        if (in_base(a)) continue;
        std::array<EndId, 3> best = base;
        for (int r = 1; r < 3; ++r) {
            std::array<EndId, 3> cand{base[r % 3], base[(r + 1) % 3], base[(r + 2) % 3]};
            if (w(cand[0], a, cand[1], cand[2]) > w(best[0], a, best[1], best[2])) best = cand;
        }
        rot[a] = best;
    }
    const L zero{};
    std::set<std::pair<EndId, EndId>> assigned;
    for (EndId a = 0; a < n; ++a) {
        if (in_base(a)) continue;
        const auto [i, j, k] = rot[a];
        for (EndId b = 0; b < n; ++b) {
            if (b == a || b == i || b == j) continue;
            L v = std::max(zero, w(i, a, j, b));
            if (assigned.count({b, a}) && !(t.wedge(b, a) == Extended<L>(v)))
                throw std::logic_error("datum_from_valuation: asymmetric wedge between " + w.label(a) + " and " + w.label(b));
            t.set_wedge(a, b, v);
            assigned.insert({a, b});
        }
    }
    return t;
}

struct RoundTripReport {
    std::size_t checked = 0;
    std::vector<std::vector<EndId>> mismatches;
    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// omega_T of the Alperin-Bass tree of datum_from_valuation(w, base) against w.
template <OrderedGroup L>
RoundTripReport roundtrip_check(const ProjectiveValuation<L>& w, std::array<EndId, 3> base) {
    auto t = datum_from_valuation(w, base);
    RoundTripReport rep;
    w.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId d) {
        ++rep.checked;
        if (!(t.canonical_valuation(a, b, c, d) == w(a, b, c, d))) rep.mismatches.push_back({a, b, c, d});
    });
    return rep;
}

/// Pushes the wedge table through an order-preserving homomorphism e.
/// e is spot-checked for e(0) = 0, additivity and monotonicity on the table values.
template <OrderedGroup L, class Fn>
auto base_change(const RootedTreeDatum<L>& t, Fn e) {
    using L2 = std::decay_t<decltype(e(std::declval<L>()))>;
    std::vector<L> vals{L{}};
    for (EndId a = 0; a < t.size(); ++a)
        for (EndId b = a + 1; b < t.size(); ++b) vals.push_back(t.meet(a, b));
    if (!(e(L{}) == L2{})) throw std::invalid_argument("base_change: e(0) != 0");
    for (const auto& x : vals)
        for (const auto& y : vals) {
            if (x <= y && !(e(x) <= e(y))) throw std::invalid_argument("base_change: e is not monotone");
            if (!(e(x + y) == e(x) + e(y))) throw std::invalid_argument("base_change: e is not additive");
        }
    RootedTreeDatum<L2> out(t.labels(), t.base_triple());
    for (EndId a = 0; a < t.size(); ++a)
        for (EndId b = a + 1; b < t.size(); ++b) out.set_wedge(a, b, e(t.meet(a, b)));
    return out;
}

/// An explicit finite tree whose leaves are the ends.
template <OrderedGroup L>
struct ExplicitTree {
    struct Edge {
        std::size_t u, v;
        L length;
    };
    std::size_t node_count = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> leaves;  // end i sits at node leaves[i]
    std::vector<std::string> labels;

    /// All-pairs distances by traversal from each node.
    [[nodiscard]] std::vector<std::vector<L>> distances() const {
        std::vector<std::vector<std::pair<std::size_t, L>>> adj(node_count);
        for (const auto& e : edges) {
            adj[e.u].push_back({e.v, e.length});
            adj[e.v].push_back({e.u, e.length});
        }
        std::vector<std::vector<L>> d(node_count, std::vector<L>(node_count));
        for (std::size_t s = 0; s < node_count; ++s) {
            std::vector<bool> seen(node_count);
            std::vector<std::size_t> stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                for (const auto& [y, len] : adj[x])
                    if (!seen[y]) {
                        seen[y] = true;
                        d[s][y] = d[s][x] + len;
                        stack.push_back(y);
                    }
            }
        }
        return d;
    }

    /// omega(a,b;c,d) = d(a, med(a,b,d)) - d(a, med(a,b,c)), medians by brute force.
    [[nodiscard]] ProjectiveValuation<L> valuation() const {
        auto d = distances();
        auto median = [&](std::size_t x, std::size_t y, std::size_t z) {
            for (std::size_t m = 0; m < node_count; ++m)
                if (d[x][m] + d[m][y] == d[x][y] && d[y][m] + d[m][z] == d[y][z] && d[x][m] + d[m][z] == d[x][z]) return m;
            throw std::logic_error("ExplicitTree: no median");
        };
        ProjectiveValuation<L> w(labels);
        w.for_each_quadruple([&](EndId a, EndId b, EndId c, EndId e) {
            auto A = leaves[a], B = leaves[b];
            w.set(a, b, c, e, d[A][median(A, B, leaves[e])] - d[A][median(A, B, leaves[c])]);
        });
        return w;
    }
};

inline std::vector<std::string> end_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::string(i < 10 ? "0" : "") + std::to_string(i));
    return out;
}

/// Four ends, a and b joined at one end of a bar, c and d at the other.
template <OrderedGroup L>
ExplicitTree<L> h_tree(const L& bar, const L& leg) {
    ExplicitTree<L> t;
    t.node_count = 6;  // 0 = ab side, 1 = cd side, 2..5 leaves
    t.edges = {{0, 1, bar}, {0, 2, leg}, {0, 3, leg}, {1, 4, leg}, {1, 5, leg}};
    t.leaves = {2, 3, 4, 5};
    t.labels = end_labels(4);
    return t;
}

template <OrderedGroup L>
ExplicitTree<L> star_tree(std::size_t n, const L& leg) {
    ExplicitTree<L> t;
    t.node_count = n + 1;
    for (std::size_t i = 0; i < n; ++i) {
        t.edges.push_back({0, i + 1, leg});
        t.leaves.push_back(i + 1);
    }
    t.labels = end_labels(n);
    return t;
}

/// Random tree with n_ends leaves: each new leaf hangs off a fresh node
/// subdividing a random edge, or off an existing internal node.
/// `length(rng)` must return a positive value of L.
template <OrderedGroup L, class LengthFn>
ExplicitTree<L> tree_generator(std::uint64_t seed, std::size_t n_ends, LengthFn length) {
    if (n_ends < 4) throw std::invalid_argument("tree_generator: need at least 4 ends");
    std::mt19937_64 rng(seed);
    ExplicitTree<L> t;
    t.node_count = 4;
    for (std::size_t i = 1; i <= 3; ++i) t.edges.push_back({0, i, length(rng)});
    t.leaves = {1, 2, 3};
    std::vector<std::size_t> internal{0};
    while (t.leaves.size() < n_ends) {
        std::size_t attach;
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
            attach = internal[std::uniform_int_distribution<std::size_t>(0, internal.size() - 1)(rng)];
        } else {
            auto k = std::uniform_int_distribution<std::size_t>(0, t.edges.size() - 1)(rng);
            attach = t.node_count++;
            auto old = t.edges[k];
            t.edges[k] = {old.u, attach, length(rng)};
            t.edges.push_back({attach, old.v, length(rng)});
            internal.push_back(attach);
        }
        std::size_t leaf = t.node_count++;
        t.edges.push_back({attach, leaf, length(rng)});
        t.leaves.push_back(leaf);
    }
    t.labels = end_labels(n_ends);
    return t;
}

/// Indented rendering: each branch vertex with its height and the ends below it.
template <OrderedGroup L>
std::string render_tree(const RootedTreeDatum<L>& t) {
    std::ostringstream os;
    std::function<void(std::vector<EndId>, int)> rec = [&](std::vector<EndId> ends, int depth) {
        std::string pad(static_cast<std::size_t>(2 * depth), ' ');
        if (ends.size() == 1) {
            os << pad << "end " << t.labels()[ends[0]] << "\n";
            return;
        }
        L m = t.meet(ends[0], ends[1]);
        for (auto x : ends)
            for (auto y : ends)
                if (x != y) m = std::min(m, t.meet(x, y));
        std::vector<std::vector<EndId>> groups;
        for (auto e : ends) {
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return t.wedge(g[0], e) > Extended<L>(m); });
            if (it == groups.end())
                groups.push_back({e});
            else
                it->push_back(e);
        }
        os << pad << "branch at height " << m.str() << "\n";
        for (auto& g : groups) rec(g, depth + 1);
    };
    std::vector<EndId> all;
    for (EndId e = 0; e < t.size(); ++e) all.push_back(e);
    rec(all, 0);
    return os.str();
}

}  // namespace weylkit
