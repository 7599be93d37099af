#pragma once

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/model_point.hpp"
#include "weylkit/scalars.hpp"

namespace weylkit {

/// Square matrix over F acting on simple-root coordinates.
template <class F>
struct Matrix {
    std::size_t n = 0;
    std::vector<F> a;  // row-major

    Matrix() = default;
    explicit Matrix(std::size_t size) : n(size), a(size * size, F(0)) {}
    static Matrix identity(std::size_t size) {
        Matrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = F(1);
        return m;
    }

    F& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.n);
        for (std::size_t i = 0; i < x.n; ++i)
            for (std::size_t k = 0; k < x.n; ++k) {
                if (x(i, k) == F(0)) continue;
                for (std::size_t j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) { return x.a == y.a; }
    friend auto operator<=>(const Matrix& x, const Matrix& y) {
        return std::lexicographical_compare_three_way(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
    }

    template <OrderedGroup L>
    [[nodiscard]] ModelPoint<L> apply(const ModelPoint<L>& x) const {
        ModelPoint<L> r = ModelPoint<L>::zero(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((*this)(i, j) != F(0)) r[i] = r[i] + scalar_mul((*this)(i, j), x[j]);
        return r;
    }

    /// Inverse by Gauss-Jordan elimination; throws on singular input.
    [[nodiscard]] Matrix inverse() const {
        Matrix m = *this, inv = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && m(piv, c) == F(0)) ++piv;
            if (piv == n) throw std::domain_error("Matrix: singular");
            if (piv != c)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(m(c, j), m(piv, j));
                    std::swap(inv(c, j), inv(piv, j));
                }
            F d = m(c, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(c, j) = m(c, j) / d;
                inv(c, j) = inv(c, j) / d;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || m(r, c) == F(0)) continue;
                F f = m(r, c);
                for (std::size_t j = 0; j < n; ++j) {
                    m(r, j) = m(r, j) - f * m(c, j);
                    inv(r, j) = inv(r, j) - f * inv(c, j);
                }
            }
        }
        return inv;
    }
};

/// A root in simple-root coordinates over F.
template <class F>
using Root = ModelPoint<F>;

/// Element of the spherical Weyl group: a reduced word in simple reflections
/// (indices 0-based, applied right to left) and its exact action matrix.
template <class F>
struct WeylElement {
    std::vector<int> word;
    Matrix<F> matrix;

    [[nodiscard]] std::size_t length() const { return word.size(); }
    template <OrderedGroup L>
    [[nodiscard]] ModelPoint<L> operator()(const ModelPoint<L>& x) const {
        return matrix.apply(x);
    }
};

/// Finite root system: A_n, B_n, C_n, G2, F4 (crystallographic) and I2(m).
///
/// Gram normalization: long roots have (a,a) = 2 in every crystallographic
/// type; all I2(m) roots have unit length. `cartan(i,j)` is <a_j, a_i^v>.
template <OrderedField F>
class RootSystem {
public:
    static RootSystem build(const std::string& label);

    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] bool crystallographic() const { return crystallographic_; }
    [[nodiscard]] const Matrix<F>& gram() const { return gram_; }
    [[nodiscard]] const F& gram(std::size_t i, std::size_t j) const { return gram_(i, j); }
    [[nodiscard]] F cartan(std::size_t i, std::size_t j) const { return F(2) * gram_(i, j) / gram_(i, i); }
    [[nodiscard]] const std::vector<Root<F>>& positive_roots() const { return positive_; }
    [[nodiscard]] Root<F> simple_root(std::size_t i) const {
        Root<F> r = Root<F>::zero(rank_);
        r[i] = F(1);
        return r;
    }

    /// Bilinear form (x, v) for an L-point x and an F-vector v.
    template <OrderedGroup L>
    [[nodiscard]] L inner(const ModelPoint<L>& x, const ModelPoint<F>& v) const {
        L acc{};
        for (std::size_t j = 0; j < rank_; ++j) {
            F w(0);
            for (std::size_t k = 0; k < rank_; ++k) w += gram_(j, k) * v[k];
            if (w != F(0)) acc = acc + scalar_mul(w, x[j]);
        }
        return acc;
    }

    [[nodiscard]] F norm2(const Root<F>& a) const { return inner(a, a); }

    /// <x, a^v> = 2 (x, a) / (a, a).
    template <OrderedGroup L>
    [[nodiscard]] L pairing(const ModelPoint<L>& x, const Root<F>& a) const {
        F n = norm2(a);
        if (n == F(0)) throw std::invalid_argument("pairing: zero root");
        return scalar_mul(F(2) / n, inner(x, a));
    }

    /// The coroot 2a/(a,a) in simple-root coordinates.
    [[nodiscard]] Root<F> coroot(const Root<F>& a) const { return scale(F(2) / norm2(a), a); }

    /// s_a(x) = x - <x, a^v> a.
    template <OrderedGroup L>
    [[nodiscard]] ModelPoint<L> reflect(const Root<F>& a, const ModelPoint<L>& x) const {
        if (a.is_zero()) throw std::invalid_argument("reflect: zero root");
        L p = pairing(x, a);
        ModelPoint<L> r = x;
        for (std::size_t i = 0; i < rank_; ++i)
            if (a[i] != F(0)) r[i] = r[i] - scalar_mul(a[i], p);
        return r;
    }

    /// r_{a,k}(x) = s_a(x) + (2k/(a,a)) a; fixes {x : (a, x) = k}.
    template <OrderedGroup L>
    [[nodiscard]] ModelPoint<L> affine_reflect(const Root<F>& a, const L& k, const ModelPoint<L>& x) const {
        ModelPoint<L> r = reflect(a, x);
        F f = F(2) / norm2(a);
        for (std::size_t i = 0; i < rank_; ++i)
            if (a[i] != F(0)) r[i] = r[i] + scalar_mul(f * a[i], k);
        return r;
    }

    [[nodiscard]] bool is_root(const Root<F>& v) const {
        for (const auto& r : positive_)
            if (r == v || r == -v) return true;
        return false;
    }

    [[nodiscard]] bool is_positive_root(const Root<F>& v) const {
        return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
    }

    [[nodiscard]] Matrix<F> simple_reflection_matrix(std::size_t i) const {
        Matrix<F> m = Matrix<F>::identity(rank_);
        for (std::size_t j = 0; j < rank_; ++j) m(i, j) = m(i, j) - cartan(i, j);
        return m;
    }

    /// Matrix of s_a; column j is s_a(a_j).
    [[nodiscard]] Matrix<F> reflect_matrix(const Root<F>& a) const {
        Matrix<F> m(rank_);
        for (std::size_t j = 0; j < rank_; ++j) {
            auto img = reflect(a, simple_root(j));
            for (std::size_t i = 0; i < rank_; ++i) m(i, j) = img[i];
        }
        return m;
    }

    /// All of W in breadth-first (length) order; words are reduced.
    [[nodiscard]] const std::vector<WeylElement<F>>& weyl_group() const {
        if (weyl_.empty()) enumerate_weyl();
        return weyl_;
    }

    [[nodiscard]] const WeylElement<F>& longest_element() const { return weyl_group().back(); }

    [[nodiscard]] WeylElement<F> from_word(const std::vector<int>& word) const {
        Matrix<F> m = Matrix<F>::identity(rank_);
        for (int i : word) m = m * simple_reflection_matrix(static_cast<std::size_t>(i));
        return {word, m};
    }

    /// Number of positive roots sent to negative roots.
    [[nodiscard]] std::size_t inversion_count(const WeylElement<F>& w) const {
        std::size_t n = 0;
        for (const auto& b : positive_) {
            auto img = w(b);
            if (!is_positive_root(img)) ++n;
        }
        return n;
    }

    template <OrderedGroup L>
    [[nodiscard]] std::set<ModelPoint<L>> weyl_orbit(const ModelPoint<L>& x) const {
        std::set<ModelPoint<L>> seen{x};
        std::deque<ModelPoint<L>> todo{x};
        while (!todo.empty()) {
            auto p = todo.front();
            todo.pop_front();
            for (std::size_t i = 0; i < rank_; ++i) {
                auto q = reflect(simple_root(i), p);
                if (seen.insert(q).second) todo.push_back(q);
            }
        }
        return seen;
    }

    template <OrderedGroup L>
    [[nodiscard]] bool is_dominant(const ModelPoint<L>& x) const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (pairing(x, simple_root(i)) < L{}) return false;
        return true;
    }

    /// (x^+, w) with w(x) = x^+ dominant.
    template <OrderedGroup L>
    [[nodiscard]] std::pair<ModelPoint<L>, WeylElement<F>> dominant_rep(const ModelPoint<L>& x) const {
        ModelPoint<L> y = x;
        std::vector<int> applied;  // in application order
        for (;;) {
            std::optional<std::size_t> neg;
            for (std::size_t i = 0; i < rank_ && !neg; ++i)
                if (pairing(y, simple_root(i)) < L{}) neg = i;
            if (!neg) break;
            y = reflect(simple_root(*neg), y);
            applied.push_back(static_cast<int>(*neg));
        }
        std::vector<int> word(applied.rbegin(), applied.rend());
        return {y, from_word(word)};
    }

    /// Dual basis to the simple roots under (,): (a_j, w_i^v) = delta_ij.
    [[nodiscard]] ModelPoint<F> fundamental_coweight(std::size_t i) const {
        if (i >= rank_) throw std::out_of_range("fundamental_coweight: index");
        if (!gram_inv_) gram_inv_ = gram_.inverse();
        ModelPoint<F> w = ModelPoint<F>::zero(rank_);
        for (std::size_t k = 0; k < rank_; ++k) w[k] = (*gram_inv_)(k, i);
        return w;
    }

    /// Highest root: coefficientwise maximal positive root (crystallographic only).
    [[nodiscard]] Root<F> highest_root() const {
        if (!crystallographic_) throw std::invalid_argument("highest_root: non-crystallographic system");
        Root<F> best = positive_.front();
        F best_height(0);
        for (const auto& r : positive_) {
            F h(0);
            for (const auto& c : r.coords) h += c;
            if (h > best_height) {
                best_height = h;
                best = r;
            }
        }
        return best;
    }

    /// Half the sum of positive roots.
    [[nodiscard]] ModelPoint<F> rho() const {
        ModelPoint<F> s = ModelPoint<F>::zero(rank_);
        for (const auto& r : positive_) s = s + r;
        return scale(F(1) / F(2), s);
    }

    /// Integer combination of coroots (equivalently of simple coroots).
    template <OrderedGroup L>
    [[nodiscard]] bool coroot_lattice_member(const ModelPoint<L>& x) const {
        require_crystallographic("coroot_lattice_member");
        for (std::size_t i = 0; i < rank_; ++i)
            if (!is_integral(scalar_mul(gram_(i, i) / F(2), x[i]))) return false;
        return true;
    }
    template <OrderedGroup L>
    [[nodiscard]] bool root_lattice_member(const ModelPoint<L>& x) const {
        require_crystallographic("root_lattice_member");
        for (std::size_t i = 0; i < rank_; ++i)
            if (!is_integral(x[i])) return false;
        return true;
    }
    /// P(R): <x, a^v> integral for all simple a.
    template <OrderedGroup L>
    [[nodiscard]] bool weight_lattice_member(const ModelPoint<L>& x) const {
        require_crystallographic("weight_lattice_member");
        for (std::size_t i = 0; i < rank_; ++i)
            if (!is_integral(pairing(x, simple_root(i)))) return false;
        return true;
    }
    /// P(R^v): (x, a) integral for all simple a. These are the special vertices.
    template <OrderedGroup L>
    [[nodiscard]] bool coweight_lattice_member(const ModelPoint<L>& x) const {
        require_crystallographic("coweight_lattice_member");
        for (std::size_t i = 0; i < rank_; ++i)
            if (!is_integral(inner(x, simple_root(i)))) return false;
        return true;
    }

    void require_crystallographic(const char* what) const {
        if (!crystallographic_) throw std::invalid_argument(std::string(what) + ": needs a crystallographic root system");
    }

private:
    template <class V>
    static bool is_integral(const V& v) {
        if constexpr (std::is_same_v<V, Rational>)
            return v.is_integer();
        else if constexpr (std::is_same_v<V, Lex>)
            return v.hi.is_integer() && v.lo.is_integer();
        else if constexpr (std::is_same_v<V, NumberFieldElem>)
            return v.poly().degree() <= 0 && (v.is_zero() || v.poly().lead().is_integer());
        else
            throw std::invalid_argument("lattice membership: unsupported coefficient domain");
    }

    void close_roots() {
        std::set<Root<F>> all;
        std::deque<Root<F>> todo;
        for (std::size_t i = 0; i < rank_; ++i) {
            all.insert(simple_root(i));
            todo.push_back(simple_root(i));
        }
        while (!todo.empty()) {
            auto r = todo.front();
            todo.pop_front();
            for (std::size_t i = 0; i < rank_; ++i) {
                auto s = reflect(simple_root(i), r);
                if (all.insert(s).second) todo.push_back(s);
            }
            if (all.size() > 10000) throw std::runtime_error("root closure did not terminate");
        }
        for (const auto& r : all) {
            bool pos = std::all_of(r.coords.begin(), r.coords.end(), [](const F& c) { return !(c < F(0)); });
            if (pos) positive_.push_back(r);
        }
        std::sort(positive_.begin(), positive_.end(), [](const Root<F>& a, const Root<F>& b) {
            F ha(0), hb(0);
            for (const auto& c : a.coords) ha += c;
            for (const auto& c : b.coords) hb += c;
            if (ha != hb) return ha < hb;
            return b < a;
        });
    }

    void enumerate_weyl() const {
        std::map<Matrix<F>, std::vector<int>> seen;
        std::vector<WeylElement<F>> order;
        auto id = Matrix<F>::identity(rank_);
        seen.emplace(id, std::vector<int>{});
        order.push_back({{}, id});
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (std::size_t i = 0; i < rank_; ++i) {
                Matrix<F> m = order[head].matrix * simple_reflection_matrix(i);
                if (seen.count(m)) continue;
                auto w = order[head].word;
                w.push_back(static_cast<int>(i));
                seen.emplace(m, w);
                order.push_back({w, m});
                if (order.size() > 100000) throw std::runtime_error("Weyl group too large");
            }
        }
        weyl_ = std::move(order);
    }

    std::string label_;
    std::size_t rank_ = 0;
    bool crystallographic_ = true;
    Matrix<F> gram_;
    std::vector<Root<F>> positive_;
    mutable std::vector<WeylElement<F>> weyl_;
    mutable std::optional<Matrix<F>> gram_inv_;
};

namespace detail {

struct ParsedLabel {
    char family;
    int n;       // rank, or dihedral order for I2
    bool dihedral;
};

inline ParsedLabel parse_label(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '_' && c != ' ') s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s.size() >= 5 && s.rfind("I2(", 0) == 0 && s.back() == ')') {
        int m = std::stoi(s.substr(3, s.size() - 4));
        if (m < 2) throw std::invalid_argument("I2(m) needs m >= 2");
        return {'I', m, true};
    }
    if (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1])))
        throw std::invalid_argument("unsupported root system label '" + raw + "'");
    char f = s[0];
    int n = std::stoi(s.substr(1));
    bool ok = (f == 'A' && n >= 1) || (f == 'B' && n >= 2) || (f == 'C' && n >= 2) || (f == 'G' && n == 2) ||
              (f == 'F' && n == 4);
    if (!ok || std::to_string(n) != s.substr(1)) throw std::invalid_argument("unsupported root system label '" + raw + "'");
    return {f, n, false};
}

}  // namespace detail

template <OrderedField F>
RootSystem<F> RootSystem<F>::build(const std::string& label) {
    auto pl = detail::parse_label(label);
    RootSystem rs;
    if (pl.dihedral) {
        rs.label_ = "I2(" + std::to_string(pl.n) + ")";
        rs.rank_ = 2;
        rs.gram_ = Matrix<F>(2);
        rs.gram_(0, 0) = F(1);
        rs.gram_(1, 1) = F(1);
        // (a1, a2) = -cos(pi/m) = -zeta/2 with zeta = 2cos(pi/m)
        F off;
        if constexpr (std::is_same_v<F, NumberFieldElem>) {
            auto field = fields::real_cyclotomic(pl.n);
            if (field->degree() == 1)
                off = NumberFieldElem(-field->minpoly.coeff(0) * Rational(-1, 2));
            else
                off = NumberFieldElem::generator(field) * NumberFieldElem(Rational(-1, 2));
        } else {
            if (pl.n == 2)
                off = F(0);
            else if (pl.n == 3)
                off = F(-1) / F(2);
            else
                throw std::invalid_argument("I2(" + std::to_string(pl.n) + ") needs number-field coefficients");
        }
        rs.gram_(0, 1) = off;
        rs.gram_(1, 0) = off;
        rs.crystallographic_ = false;  // treated as a Coxeter system even when m is 2, 3, 4 or 6
        rs.close_roots();
        return rs;
    }
    std::size_t n = static_cast<std::size_t>(pl.n);
    rs.rank_ = n;
    rs.gram_ = Matrix<F>(n);
    auto set = [&](std::size_t i, std::size_t j, F v) {
        rs.gram_(i, j) = v;
        rs.gram_(j, i) = v;
    };
    switch (pl.family) {
        case 'A':
            rs.label_ = "A" + std::to_string(n);
            for (std::size_t i = 0; i < n; ++i) set(i, i, F(2));
            for (std::size_t i = 0; i + 1 < n; ++i) set(i, i + 1, F(-1));
            break;
        case 'B':  // a_n short
            rs.label_ = "B" + std::to_string(n);
            for (std::size_t i = 0; i + 1 < n; ++i) set(i, i, F(2));
            set(n - 1, n - 1, F(1));
            for (std::size_t i = 0; i + 1 < n; ++i) set(i, i + 1, F(-1));
            break;
        case 'C':  // a_n long
            rs.label_ = "C" + std::to_string(n);
            for (std::size_t i = 0; i + 1 < n; ++i) set(i, i, F(1));
            set(n - 1, n - 1, F(2));
            for (std::size_t i = 0; i + 2 < n; ++i) set(i, i + 1, F(-1) / F(2));
            set(n - 2, n - 1, F(-1));
            break;
        case 'G':  // a1 short
            rs.label_ = "G2";
            set(0, 0, F(2) / F(3));
            set(1, 1, F(2));
            set(0, 1, F(-1));
            break;
        case 'F':  // a1, a2 long
            rs.label_ = "F4";
            set(0, 0, F(2));
            set(1, 1, F(2));
            set(2, 2, F(1));
            set(3, 3, F(1));
            set(0, 1, F(-1));
            set(1, 2, F(-1));
            set(2, 3, F(-1) / F(2));
            break;
        default:
            throw std::invalid_argument("unsupported root system label '" + label + "'");
    }
    rs.crystallographic_ = true;
    rs.close_roots();
    return rs;
}

}  // namespace weylkit
