#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylkit/polynomial.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

using BigRational = boost::multiprecision::cpp_rational;

inline BigRational to_big(const Rational& r) { return BigRational(r.num()) / BigRational(r.den()); }

/// Back to 64 bits; throws when the value does not fit.
inline Rational from_big(const BigRational& b) {
    using boost::multiprecision::cpp_int;
    cpp_int n = boost::multiprecision::numerator(b), d = boost::multiprecision::denominator(b);
    const cpp_int lim(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational: 64-bit overflow");
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

namespace detail {

/// Number of distinct real roots of a squarefree p in the half-open (lo, hi].
inline int sturm_count(const UPoly<BigRational>& p, const BigRational& lo, const BigRational& hi) {
    std::vector<UPoly<BigRational>> seq;
    seq.push_back(p);
    std::vector<BigRational> d;
    for (int i = 1; i <= p.degree(); ++i) d.push_back(BigRational(i) * p.coeff(static_cast<std::size_t>(i)));
    seq.emplace_back(std::move(d));
    while (!seq.back().is_zero()) {
        auto r = seq[seq.size() - 2].mod(seq.back());
        seq.push_back(-r);
    }
    seq.pop_back();
    auto changes = [&](const BigRational& x) {
        int count = 0;
        int prev = 0;
        for (const auto& q : seq) {
            BigRational v = q.eval(x);
            int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return changes(lo) - changes(hi);
}

struct Interval {
    BigRational lo, hi;
};

inline Interval mul(const Interval& a, const Interval& b) {
    BigRational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Interval r{p[0], p[0]};
    for (const auto& v : p) {
        if (v < r.lo) r.lo = v;
        if (v > r.hi) r.hi = v;
    }
    return r;
}

}  // namespace detail

/// A real number field Q(zeta): a monic irreducible minimal polynomial and a
/// rational isolating interval (lo, hi] holding exactly one real root zeta.
struct NumberField {
    std::string name;
    UPoly<Rational> minpoly;
    Rational lo, hi;

    [[nodiscard]] int degree() const { return minpoly.degree(); }

    static std::shared_ptr<const NumberField> make(std::string name, UPoly<Rational> minpoly, Rational lo,
                                                   Rational hi) {
        if (minpoly.degree() < 1) throw std::invalid_argument("NumberField: minimal polynomial must have degree >= 1");
        if (!(lo < hi)) throw std::invalid_argument("NumberField: empty isolating interval");
        auto m = minpoly.monic();
        auto big = m.map<BigRational>(to_big);
        if (detail::sturm_count(big, to_big(lo), to_big(hi)) != 1)
            throw std::invalid_argument("NumberField: interval does not isolate exactly one root of " + name);
        return std::make_shared<const NumberField>(NumberField{std::move(name), std::move(m), lo, hi});
    }

    /// Narrows the isolator to width <= 2^-bits.
    [[nodiscard]] detail::Interval refine(int bits) const {
        auto m = minpoly.map<BigRational>(to_big);
        detail::Interval iv{to_big(lo), to_big(hi)};
        BigRational width = BigRational(1);
        for (int i = 0; i < bits; ++i) width /= 2;
        while (iv.hi - iv.lo > width) bisect(m, iv);
        return iv;
    }

    static void bisect(const UPoly<BigRational>& m, detail::Interval& iv) {
        BigRational mid = (iv.lo + iv.hi) / 2;
        if (detail::sturm_count(m, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }

    [[nodiscard]] double root_approx() const {
        auto iv = refine(60);
        return static_cast<double>((iv.lo + iv.hi) / 2);
    }
};

/// Element of a real number field, stored as the reduced polynomial in zeta.
///
/// A default-constructed or rational-constructed element carries no field;
/// it behaves as a rational constant and adopts the field of whatever it is
/// combined with. Combining elements of two different fields throws.
class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(const Rational& r) : poly_(UPoly<Rational>::constant(r)) {}  // NOLINT
    NumberFieldElem(std::int64_t n) : NumberFieldElem(Rational(n)) {}           // NOLINT
    NumberFieldElem(std::shared_ptr<const NumberField> f, std::vector<Rational> coeffs)
        : field_(std::move(f)), poly_(std::move(coeffs)) {
        if (field_) poly_ = poly_.mod(field_->minpoly);
    }

    /// The distinguished root zeta itself.
    static NumberFieldElem generator(std::shared_ptr<const NumberField> f) {
        return NumberFieldElem(std::move(f), {Rational(0), Rational(1)});
    }

    [[nodiscard]] const std::shared_ptr<const NumberField>& field() const { return field_; }
    [[nodiscard]] const UPoly<Rational>& poly() const { return poly_; }
    [[nodiscard]] bool is_zero() const { return poly_.is_zero(); }

    /// Coefficient list of length deg (or 1 for plain rationals).
    [[nodiscard]] std::vector<Rational> coefficients() const {
        std::size_t n = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < poly_.coeffs().size() && i < n; ++i) c[i] = poly_.coeffs()[i];
        return c;
    }

    friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
        return {common(a, b), a.poly_ + b.poly_, 0};
    }
    friend NumberFieldElem operator-(const NumberFieldElem& a) { return {a.field_, -a.poly_, 0}; }
    friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) { return a + (-b); }
    friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
        auto f = common(a, b);
        auto p = a.poly_ * b.poly_;
        if (f) p = p.mod(f->minpoly);
        return {f, std::move(p), 0};
    }
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) { return a * b.inverse(); }
    NumberFieldElem& operator+=(const NumberFieldElem& o) { return *this = *this + o; }
    NumberFieldElem& operator-=(const NumberFieldElem& o) { return *this = *this - o; }
    NumberFieldElem& operator*=(const NumberFieldElem& o) { return *this = *this * o; }
    NumberFieldElem& operator/=(const NumberFieldElem& o) { return *this = *this / o; }

    [[nodiscard]] NumberFieldElem inverse() const {
        if (is_zero()) throw std::domain_error("NumberFieldElem: inverse of zero");
        if (!field_ || poly_.degree() == 0) return {field_, UPoly<Rational>::constant(Rational(1) / poly_.lead()), 0};
        // Euclid runs in arbitrary precision; only the reduced inverse must fit
        auto m = field_->minpoly.map<BigRational>(to_big);
        auto [g, s] = gcd_cofactor(poly_.map<BigRational>(to_big), m);
        if (g.degree() != 0) throw std::domain_error("NumberFieldElem: minimal polynomial is reducible");
        return {field_, s.mod(m).map<Rational>(from_big), 0};
    }

    /// Exact sign of the real value.
    [[nodiscard]] int sign() const {
        if (is_zero()) return 0;
        if (!field_ || poly_.degree() == 0) return poly_.lead().sign();
        auto m = field_->minpoly.map<BigRational>(to_big);
        auto g = poly_.map<BigRational>(to_big);
        detail::Interval iv{to_big(field_->lo), to_big(field_->hi)};
        // zeta is a root of g iff it is a root of gcd(g, m); the isolator holds
        // exactly one root of m, so a sign change of the gcd across it decides.
        auto common_factor = gcd(g, m);
        if (common_factor.degree() >= 1) {
            BigRational a = common_factor.eval(iv.lo), b = common_factor.eval(iv.hi);
            if (b == 0 || (a < 0) != (b < 0)) return 0;
        }
        for (int iter = 0; iter < 4096; ++iter) {
            detail::Interval v{BigRational(0), BigRational(0)};
            for (std::size_t i = g.coeffs().size(); i-- > 0;) {
                v = detail::mul(v, iv);
                v.lo += g.coeffs()[i];
                v.hi += g.coeffs()[i];
            }
            if (v.lo > 0) return 1;
            if (v.hi < 0) return -1;
            NumberField::bisect(m, iv);
        }
        throw std::runtime_error("NumberFieldElem: sign refinement did not terminate");
    }

    [[nodiscard]] double to_double() const {
        if (!field_) return poly_.lead().to_double();
        double z = field_->root_approx();
        double acc = 0;
        for (std::size_t i = poly_.coeffs().size(); i-- > 0;) acc = acc * z + poly_.coeffs()[i].to_double();
        return acc;
    }

    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) { return (a - b).is_zero(); }
    friend std::strong_ordering operator<=>(const NumberFieldElem& a, const NumberFieldElem& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "[c0,c1,...]@name"; plain rationals print as "p/q".
    [[nodiscard]] std::string str() const {
        if (!field_) return poly_.lead().str();
        std::string s = "[";
        auto c = coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += c[i].str();
        }
        return s + "]@" + field_->name;
    }

    friend std::ostream& operator<<(std::ostream& os, const NumberFieldElem& x) { return os << x.str(); }

private:
    NumberFieldElem(std::shared_ptr<const NumberField> f, UPoly<Rational> p, int /*tag*/)
        : field_(std::move(f)), poly_(std::move(p)) {}

    static std::shared_ptr<const NumberField> common(const NumberFieldElem& a, const NumberFieldElem& b) {
        if (!a.field_) return b.field_;
        if (!b.field_) return a.field_;
        if (a.field_ != b.field_ && a.field_->name != b.field_->name)
            throw std::invalid_argument("NumberFieldElem: mixing fields " + a.field_->name + " and " + b.field_->name);
        return a.field_;
    }

    std::shared_ptr<const NumberField> field_;
    UPoly<Rational> poly_;
};

inline NumberFieldElem abs(const NumberFieldElem& x) { return x.sign() < 0 ? -x : x; }

/// Renders a rational polynomial as "x^4-4x^2+2".
inline std::string poly_name(const UPoly<Rational>& p) {
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = abs(c);
        if (!s.empty() || neg) s += neg ? "-" : "+";
        if (i == 0 || a != Rational(1)) s += a.str();
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace fields {

namespace detail {

inline UPoly<Rational> cyclotomic(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    UPoly<Rational> p = UPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(n)) -
                        UPoly<Rational>::constant(Rational(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = p.divmod(cyclotomic(d)).first;
    return p;
}

/// Minimal polynomial of 2cos(pi/n), from the palindromic Phi_{2n}.
inline UPoly<Rational> two_cos_pi_over(int n) {
    auto phi = cyclotomic(2 * n);
    int m = phi.degree() / 2;
    // D_k(y) = z^k + z^-k with y = z + 1/z
    std::vector<UPoly<Rational>> dk;
    dk.push_back(UPoly<Rational>::constant(Rational(2)));
    dk.push_back(UPoly<Rational>::monomial(Rational(1), 1));
    for (int k = 2; k <= m; ++k) dk.push_back(UPoly<Rational>::monomial(Rational(1), 1) * dk[k - 1] - dk[k - 2]);
    UPoly<Rational> q = UPoly<Rational>::constant(phi.coeff(static_cast<std::size_t>(m)));
    for (int k = 1; k <= m; ++k) q = q + phi.coeff(static_cast<std::size_t>(m + k)) * dk[static_cast<std::size_t>(k)];
    return q;
}

inline std::shared_ptr<const NumberField> isolate(std::string name, UPoly<Rational> minpoly, double approx) {
    // brackets shrink until exactly one root is enclosed
    for (std::int64_t den = 64; den <= (std::int64_t{1} << 40); den *= 4) {
        auto c = static_cast<std::int64_t>(std::floor(approx * static_cast<double>(den)));
        Rational lo(c - 1, den), hi(c + 2, den);
        auto big = minpoly.map<BigRational>(to_big);
        if (weylkit::detail::sturm_count(big, to_big(lo), to_big(hi)) == 1)
            return NumberField::make(std::move(name), std::move(minpoly), lo, hi);
    }
    throw std::runtime_error("fields: could not isolate root for " + name);
}

inline std::map<std::string, std::shared_ptr<const NumberField>>& registry() {
    static std::map<std::string, std::shared_ptr<const NumberField>> r;
    return r;
}
inline std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

/// Field Q(2cos(pi/n)); cached per n. n = 8 gives x^4-4x^2+2, the field of sqrt(2+sqrt2).
inline std::shared_ptr<const NumberField> real_cyclotomic(int n) {
    if (n < 2) throw std::invalid_argument("real_cyclotomic: n must be >= 2");
    auto mp = detail::two_cos_pi_over(n);
    std::string name = poly_name(mp);
    std::lock_guard lock(detail::registry_mutex());
    auto& reg = detail::registry();
    if (auto it = reg.find(name); it != reg.end()) return it->second;
    auto f = detail::isolate(name, mp, 2.0 * std::cos(std::numbers::pi / n));
    reg.emplace(name, f);
    return f;
}

inline std::shared_ptr<const NumberField> quadratic(std::int64_t d) {
    UPoly<Rational> mp({Rational(-d), Rational(0), Rational(1)});
    std::string name = poly_name(mp);
    std::lock_guard lock(detail::registry_mutex());
    auto& reg = detail::registry();
    if (auto it = reg.find(name); it != reg.end()) return it->second;
    auto f = detail::isolate(name, mp, std::sqrt(static_cast<double>(d)));
    reg.emplace(name, f);
    return f;
}

inline std::shared_ptr<const NumberField> sqrt2() { return quadratic(2); }
inline std::shared_ptr<const NumberField> sqrt3() { return quadratic(3); }
/// zeta = sqrt(2 + sqrt2), minimal polynomial x^4 - 4x^2 + 2; sqrt2 = zeta^2 - 2.
inline std::shared_ptr<const NumberField> sqrt_2_plus_sqrt2() { return real_cyclotomic(8); }

inline std::shared_ptr<const NumberField> by_name(const std::string& name) {
    if (name == "x^2-2") return sqrt2();
    if (name == "x^2-3") return sqrt3();
    {
        std::lock_guard lock(detail::registry_mutex());
        auto& reg = detail::registry();
        if (auto it = reg.find(name); it != reg.end()) return it->second;
    }
    for (int n = 2; n <= 64; ++n)
        if (poly_name(detail::two_cos_pi_over(n)) == name) return real_cyclotomic(n);
    throw std::invalid_argument("unknown number field '" + name + "'");
}

}  // namespace fields

/// Parses "[c0,c1,...]@name" or a plain rational.
inline NumberFieldElem parse_number_field_elem(const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos) return NumberFieldElem(Rational::parse(text));
    auto body = text.substr(0, at);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("number field literal must look like [c0,c1,...]@name");
    std::vector<Rational> c;
    std::stringstream ss(body.substr(1, body.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(Rational::parse(item));
    auto f = fields::by_name(text.substr(at + 1));
    if (static_cast<int>(c.size()) > f->degree()) throw std::invalid_argument("too many coefficients for " + f->name);
    return NumberFieldElem(f, std::move(c));
}

}  // namespace weylkit
