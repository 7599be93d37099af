#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "weylkit/lex_pair.hpp"
#include "weylkit/number_field.hpp"
#include "weylkit/quadratic_integer.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

/// The value-group contract: zero (value-initialization), +, -, total order.
template <class T>
concept OrderedGroup = std::regular<T> && requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a <=> b };
};

/// An ordered field additionally multiplies and divides.
template <class T>
concept OrderedField = OrderedGroup<T> && requires(const T& a, const T& b) {
    { a* b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    T(1);
};

/// F-action on a field acting on itself.
template <OrderedField F>
F scalar_mul(const F& c, const F& x) {
    return c * x;
}

/// Rationals act on every number field.
inline NumberFieldElem scalar_mul(const Rational& c, const NumberFieldElem& x) { return NumberFieldElem(c) * x; }

/// The F-module contract: value group plus an action of the coefficient field.
template <class L, class F>
concept FModule = OrderedGroup<L> && OrderedField<F> && requires(const F& c, const L& x) {
    { scalar_mul(c, x) } -> std::convertible_to<L>;
};

template <OrderedGroup L>
L abs_value(const L& x) {
    return x < L{} ? -x : x;
}

template <OrderedGroup L>
int sign_of(const L& x) {
    auto c = x <=> L{};
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

/// L extended by +infinity (for chains like a ^ a = inf or nu(0) = inf).
template <OrderedGroup L>
class Extended {
public:
    Extended() = default;  // +infinity
    Extended(L v) : v_(std::move(v)) {}  // NOLINT
    static Extended infinity() { return {}; }

    [[nodiscard]] bool is_infinite() const { return !v_.has_value(); }
    [[nodiscard]] const L& value() const {
        if (!v_) throw std::domain_error("Extended: value of +infinity");
        return *v_;
    }

    friend Extended operator+(const Extended& a, const Extended& b) {
        if (a.is_infinite() || b.is_infinite()) return {};
        return Extended(*a.v_ + *b.v_);
    }
    friend bool operator==(const Extended& a, const Extended& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return *a.v_ == *b.v_;
    }
    friend std::weak_ordering operator<=>(const Extended& a, const Extended& b) {
        if (a.is_infinite() && b.is_infinite()) return std::weak_ordering::equivalent;
        if (a.is_infinite()) return std::weak_ordering::greater;
        if (b.is_infinite()) return std::weak_ordering::less;
        auto c = *a.v_ <=> *b.v_;
        return c < 0 ? std::weak_ordering::less : (c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent);
    }

    [[nodiscard]] std::string str() const { return v_ ? v_->str() : std::string("inf"); }

private:
    std::optional<L> v_;
};

/// Runtime-tagged scalar for text I/O and cross-domain checks.
using Lex = LexPair<Rational, Rational>;
using ScalarValue = std::variant<Rational, NumberFieldElem, Lex, QuadraticInteger>;

/// Total order within a domain; comparing different domains throws.
inline std::strong_ordering compare(const ScalarValue& x, const ScalarValue& y) {
    if (x.index() != y.index()) throw std::invalid_argument("compare: mixed-domain comparison");
    return std::visit(
        [&](const auto& a) -> std::strong_ordering {
            using T = std::decay_t<decltype(a)>;
            const auto& b = std::get<T>(y);
            auto c = a <=> b;
            return c < 0 ? std::strong_ordering::less
                         : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        },
        x);
}

inline int sign(const ScalarValue& x) {
    return std::visit([](const auto& a) { return sign_of(a); }, x);
}

/// Action of a rational (or number-field) coefficient on a scalar.
inline ScalarValue scalar_mul(const ScalarValue& c, const ScalarValue& x) {
    if (const auto* q = std::get_if<Rational>(&c)) {
        return std::visit(
            [&](const auto& v) -> ScalarValue {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Rational>) return *q * v;
                else if constexpr (std::is_same_v<T, NumberFieldElem>) return NumberFieldElem(*q) * v;
                else if constexpr (std::is_same_v<T, Lex>) return scalar_mul(*q, v);
                else {
                    if (!q->is_integer()) throw std::invalid_argument("scalar_mul: Z[sqrt p] admits integer action only");
                    return q->num() * v;
                }
            },
            x);
    }
    if (const auto* n = std::get_if<NumberFieldElem>(&c)) {
        if (const auto* v = std::get_if<NumberFieldElem>(&x)) return *n * *v;
        if (const auto* v = std::get_if<Rational>(&x)) return *n * NumberFieldElem(*v);
    }
    throw std::invalid_argument("scalar_mul: unsupported F-action");
}

inline std::string to_text(const ScalarValue& x) {
    return std::visit([](const auto& v) { return v.str(); }, x);
}

inline Lex parse_lex(const std::string& s) {
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("lex literal must be (hi;lo)");
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("lex literal must be (hi;lo)");
    return {Rational::parse(s.substr(1, semi - 1)), Rational::parse(s.substr(semi + 1, s.size() - semi - 2))};
}

/// Recognizes the four textual forms: "p/q", "[...]@poly", "(hi;lo)", "a+b√p".
inline ScalarValue parse_scalar(const std::string& s) {
    if (!s.empty() && s.front() == '(') return parse_lex(s);
    if (s.find('@') != std::string::npos) return parse_number_field_elem(s);
    if (s.find("√") != std::string::npos) return QuadraticInteger::parse(s);
    return Rational::parse(s);
}

}  // namespace weylkit
