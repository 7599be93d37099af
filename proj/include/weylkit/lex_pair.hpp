#pragma once

#include <compare>
#include <ostream>
#include <type_traits>
#include <utility>
#include <stdexcept>
#include <string>

namespace weylkit {

/// Lexicographically ordered pair (hi; lo). An ordered abelian group, not a
/// field: there is no multiplication of two pairs and no division.
template <class Hi, class Lo = Hi>
struct LexPair {
    Hi hi{};
    Lo lo{};

    LexPair() = default;
    LexPair(Hi h, Lo l) : hi(std::move(h)), lo(std::move(l)) {}
    template <class I>
        requires std::is_integral_v<I>
    LexPair(I zero) : hi(0), lo(0) {  // NOLINT: only 0 is meaningful
        if (zero != 0) throw std::invalid_argument("LexPair: only the integer 0 converts to a lex pair");
    }

    friend LexPair operator+(const LexPair& a, const LexPair& b) { return {a.hi + b.hi, a.lo + b.lo}; }
    friend LexPair operator-(const LexPair& a) { return {-a.hi, -a.lo}; }
    friend LexPair operator-(const LexPair& a, const LexPair& b) { return {a.hi - b.hi, a.lo - b.lo}; }
    LexPair& operator+=(const LexPair& o) { return *this = *this + o; }
    LexPair& operator-=(const LexPair& o) { return *this = *this - o; }

    friend bool operator==(const LexPair& a, const LexPair& b) { return a.hi == b.hi && a.lo == b.lo; }
    friend auto operator<=>(const LexPair& a, const LexPair& b) {
        if (auto c = a.hi <=> b.hi; c != 0) return c;
        return a.lo <=> b.lo;
    }

    [[nodiscard]] std::string str() const { return "(" + hi.str() + ";" + lo.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const LexPair& p) { return os << p.str(); }
};

template <class Hi, class Lo>
LexPair<Hi, Lo> abs(const LexPair<Hi, Lo>& x) {
    return x < LexPair<Hi, Lo>{} ? -x : x;
}

/// Componentwise action of a scalar of the underlying field.
template <class F, class Hi, class Lo>
    requires requires(F c, Hi h, Lo l) {
        c* h;
        c* l;
    }
LexPair<Hi, Lo> scalar_mul(const F& c, const LexPair<Hi, Lo>& x) {
    return {c * x.hi, c * x.lo};
}

}  // namespace weylkit
