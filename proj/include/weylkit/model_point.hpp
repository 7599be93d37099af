#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylkit/scalars.hpp"

namespace weylkit {

/// A point of the model apartment: a formal L-combination of simple roots.
template <OrderedGroup L>
struct ModelPoint {
    std::vector<L> coords;

    ModelPoint() = default;
    explicit ModelPoint(std::vector<L> c) : coords(std::move(c)) {}
    ModelPoint(std::initializer_list<L> c) : coords(c) {}
    static ModelPoint zero(std::size_t rank) { return ModelPoint(std::vector<L>(rank, L{})); }

    [[nodiscard]] std::size_t rank() const { return coords.size(); }
    const L& operator[](std::size_t i) const { return coords[i]; }
    L& operator[](std::size_t i) { return coords[i]; }

    friend ModelPoint operator+(const ModelPoint& a, const ModelPoint& b) {
        check(a, b);
        ModelPoint r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = r.coords[i] + b.coords[i];
        return r;
    }
    friend ModelPoint operator-(const ModelPoint& a, const ModelPoint& b) {
        check(a, b);
        ModelPoint r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = r.coords[i] - b.coords[i];
        return r;
    }
    friend ModelPoint operator-(const ModelPoint& a) {
        ModelPoint r = a;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    ModelPoint& operator+=(const ModelPoint& o) { return *this = *this + o; }
    ModelPoint& operator-=(const ModelPoint& o) { return *this = *this - o; }

    friend bool operator==(const ModelPoint& a, const ModelPoint& b) { return a.coords == b.coords; }
    /// Lexicographic on coordinates; used only for canonical sorting.
    friend auto operator<=>(const ModelPoint& a, const ModelPoint& b) {
        return std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                                      b.coords.end());
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coords)
            if (c != L{}) return false;
        return true;
    }

    [[nodiscard]] std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].str();
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const ModelPoint& p) { return os << p.str(); }

private:
    static void check(const ModelPoint& a, const ModelPoint& b) {
        if (a.coords.size() != b.coords.size()) throw std::invalid_argument("ModelPoint: rank mismatch");
    }
};

/// c * x for a field scalar acting on every coordinate.
template <class F, OrderedGroup L>
ModelPoint<L> scale(const F& c, const ModelPoint<L>& x) {
    ModelPoint<L> r = x;
    for (auto& v : r.coords) v = scalar_mul(c, v);
    return r;
}

}  // namespace weylkit
