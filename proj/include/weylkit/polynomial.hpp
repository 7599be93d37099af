#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylkit {

/// Dense univariate polynomial over a field, coefficients low degree first.
/// The zero polynomial has no coefficients; otherwise the lead is nonzero.
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
    static UPoly monomial(const K& k, std::size_t deg) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = k;
        return UPoly(std::move(c));
    }

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<K>& coeffs() const { return c_; }
    [[nodiscard]] K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    [[nodiscard]] K lead() const { return c_.empty() ? K(0) : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = -x;
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const K& k, const UPoly& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = k * x;
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Euclidean division; returns (quotient, remainder).
    [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
        std::vector<K> rem = c_;
        int dd = d.degree();
        if (degree() < dd) return {UPoly{}, *this};
        std::vector<K> q(static_cast<std::size_t>(degree() - dd + 1), K(0));
        K lc = d.lead();
        for (int i = degree(); i >= dd; --i) {
            K f = rem[static_cast<std::size_t>(i)] / lc;
            q[static_cast<std::size_t>(i - dd)] = f;
            if (f == K(0)) continue;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {UPoly(std::move(q)), UPoly(std::move(rem))};
    }
    [[nodiscard]] UPoly mod(const UPoly& d) const { return divmod(d).second; }

    [[nodiscard]] UPoly monic() const {
        if (is_zero()) return {};
        return (K(1) / lead()) * *this;
    }

    template <class V>
    [[nodiscard]] V eval(const V& x) const {
        V acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    /// Converts coefficients into another field (e.g. a wider rational type).
    template <class K2, class Conv>
    [[nodiscard]] UPoly<K2> map(Conv conv) const {
        std::vector<K2> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(conv(x));
        return UPoly<K2>(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s) with s*a == g (mod b), g monic.
template <class K>
std::pair<UPoly<K>, UPoly<K>> gcd_cofactor(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly<K> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    K inv = K(1) / r0.lead();
    return {inv * r0, inv * s0};
}

}  // namespace weylkit
