#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylkit {

/// a + b*sqrt(p) with integers a, b and p in {2, 3}.
///
/// The ordering is the real one, decided by integer comparisons of a^2 and
/// p*b^2. Values with p = 0 represent a plain integer that adopts the radicand
/// of whatever it meets (the additive identity is QuadraticInteger{}).
class QuadraticInteger {
public:
    QuadraticInteger() = default;
    QuadraticInteger(std::int64_t a, std::int64_t b, int p) : a_(a), b_(b), p_(p) {
        if (p != 2 && p != 3) throw std::invalid_argument("QuadraticInteger: p must be 2 or 3");
    }
    static QuadraticInteger integer(std::int64_t a) {
        QuadraticInteger q;
        q.a_ = a;
        return q;
    }

    [[nodiscard]] std::int64_t a() const { return a_; }
    [[nodiscard]] std::int64_t b() const { return b_; }
    /// 0 when the radicand is still open (b == 0 and never combined).
    [[nodiscard]] int p() const { return p_; }

    [[nodiscard]] int sign() const {
        auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        __int128 a2 = static_cast<__int128>(a_) * a_;
        __int128 pb2 = static_cast<__int128>(p_) * b_ * b_;
        if (a2 == pb2) return 0;  // impossible for p squarefree unless both are 0
        return a2 > pb2 ? sa : sb;
    }

    friend QuadraticInteger operator+(const QuadraticInteger& x, const QuadraticInteger& y) {
        return {checked(static_cast<__int128>(x.a_) + y.a_), checked(static_cast<__int128>(x.b_) + y.b_),
                common(x, y), 0};
    }
    friend QuadraticInteger operator-(const QuadraticInteger& x) { return {-x.a_, -x.b_, x.p_, 0}; }
    friend QuadraticInteger operator-(const QuadraticInteger& x, const QuadraticInteger& y) { return x + (-y); }
    QuadraticInteger& operator+=(const QuadraticInteger& o) { return *this = *this + o; }
    QuadraticInteger& operator-=(const QuadraticInteger& o) { return *this = *this - o; }

    /// Multiplication by an integer.
    friend QuadraticInteger operator*(std::int64_t k, const QuadraticInteger& x) {
        return {checked(static_cast<__int128>(k) * x.a_), checked(static_cast<__int128>(k) * x.b_), x.p_, 0};
    }
    /// Ring product in Z[sqrt p].
    friend QuadraticInteger operator*(const QuadraticInteger& x, const QuadraticInteger& y) {
        int p = common(x, y);
        __int128 a = static_cast<__int128>(x.a_) * y.a_ + static_cast<__int128>(p) * x.b_ * y.b_;
        __int128 b = static_cast<__int128>(x.a_) * y.b_ + static_cast<__int128>(x.b_) * y.a_;
        return {checked(a), checked(b), p, 0};
    }

    /// (a, b) -> (p*b, a), i.e. multiplication by sqrt(p).
    [[nodiscard]] QuadraticInteger times_sqrt_p(int p) const {
        int q = p_ == 0 ? p : p_;
        if (q != p) throw std::invalid_argument("QuadraticInteger: radicand mismatch");
        return {checked(static_cast<__int128>(q) * b_), a_, q, 0};
    }

    friend bool operator==(const QuadraticInteger& x, const QuadraticInteger& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || common(x, y) != 0);
    }
    friend std::strong_ordering operator<=>(const QuadraticInteger& x, const QuadraticInteger& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(p_ == 0 ? 2 : p_));
    }

    /// "a+b√p" (always both terms, e.g. "3-2√2", "0+1√3").
    [[nodiscard]] std::string str() const {
        int p = p_ == 0 ? 2 : p_;
        std::string s = std::to_string(a_);
        s += b_ < 0 ? "-" : "+";
        s += std::to_string(b_ < 0 ? -b_ : b_);
        s += "√" + std::to_string(p);
        return s;
    }

    /// Parses "a+b√p" / "a-b√p" (also accepts "sqrt" or "r" in place of "√" for ASCII input).
    static QuadraticInteger parse(std::string_view text, int default_p = 2) {
        std::string s(text);
        auto replace = [&](const std::string& from, const std::string& to) {
            for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from)) s.replace(pos, from.size(), to);
        };
        replace("√", "r");
        replace("sqrt", "r");
        replace(" ", "");
        auto r = s.find('r');
        if (r == std::string::npos) {
            std::size_t pos = 0;
            auto a = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("QuadraticInteger: bad literal '" + std::string(text) + "'");
            return {a, 0, default_p};
        }
        int p = default_p;
        if (r + 1 < s.size()) p = std::stoi(s.substr(r + 1));
        std::string head = s.substr(0, r);
        // split "a+b" / "a-b" / "b" at the last sign that is not leading
        std::size_t split = std::string::npos;
        for (std::size_t i = head.size(); i-- > 1;)
            if (head[i] == '+' || head[i] == '-') {
                split = i;
                break;
            }
        std::int64_t a = 0, b = 0;
        auto to_b = [](const std::string& t) -> std::int64_t {
            if (t.empty() || t == "+") return 1;
            if (t == "-") return -1;
            return std::stoll(t);
        };
        if (split == std::string::npos) {
            b = to_b(head);
        } else {
            a = std::stoll(head.substr(0, split));
            b = to_b(head.substr(split));
        }
        return {a, b, p};
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticInteger& q) { return os << q.str(); }

private:
    QuadraticInteger(std::int64_t a, std::int64_t b, int p, int /*tag*/) : a_(a), b_(b), p_(p) {}

    static int common(const QuadraticInteger& x, const QuadraticInteger& y) {
        if (x.p_ == 0) return y.p_;
        if (y.p_ == 0) return x.p_;
        if (x.p_ != y.p_) throw std::invalid_argument("QuadraticInteger: mixing Z[sqrt2] and Z[sqrt3]");
        return x.p_;
    }
    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < -INT64_MAX) throw std::overflow_error("QuadraticInteger: overflow");
        return static_cast<std::int64_t>(v);
    }

    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    int p_ = 0;
};

inline QuadraticInteger abs(const QuadraticInteger& x) { return x.sign() < 0 ? -x : x; }

}  // namespace weylkit
