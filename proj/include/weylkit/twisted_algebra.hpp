#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/number_field.hpp"
#include "weylkit/quadratic_integer.hpp"
#include "weylkit/scalars.hpp"

namespace weylkit {

using Exponent = QuadraticInteger;
using NormValue = Extended<QuadraticInteger>;

/// Finite Laurent sum over F_p with exponents in Z[sqrt p], p in {2, 3}.
/// theta acts on exponents by multiplication with sqrt p and trivially on F_p,
/// so theta o theta is the Frobenius.
class Laurent {
public:
    explicit Laurent(int p = 2) : p_(check_p(p)) {}
    static Laurent monomial(int p, std::int64_t a, std::int64_t b, int coeff = 1) {
        return monomial(p, Exponent(a, b, p), coeff);
    }
    static Laurent monomial(int p, const Exponent& e, int coeff = 1) {
        Laurent x(p);
        x.add_term(e, coeff);
        return x;
    }
    static Laurent one(int p) { return monomial(p, 0, 0); }
    /// The uniformizer x.
    static Laurent x(int p) { return monomial(p, 1, 0); }

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] const std::map<Exponent, int>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

    /// Least exponent; +inf for 0.
    [[nodiscard]] NormValue nu() const {
        if (terms_.empty()) return NormValue::infinity();
        return NormValue(terms_.begin()->first);
    }

    friend Laurent operator+(const Laurent& x, const Laurent& y) {
        Laurent out = x;
        out.require_same(y);
        for (const auto& [e, c] : y.terms_) out.add_term(e, c);
        return out;
    }
    friend Laurent operator-(const Laurent& x) {
        Laurent out(x.p_);
        for (const auto& [e, c] : x.terms_) out.add_term(e, x.p_ - c);
        return out;
    }
    friend Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }
    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        x.require_same(y);
        Laurent out(x.p_);
        for (const auto& [e1, c1] : x.terms_)
            for (const auto& [e2, c2] : y.terms_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }
    friend bool operator==(const Laurent& x, const Laurent& y) { return x.p_ == y.p_ && x.terms_ == y.terms_; }

    [[nodiscard]] Laurent pow(unsigned n) const {
        Laurent out = one(p_), base = *this;
        for (; n; n >>= 1) {
            if (n & 1u) out = out * base;
            base = base * base;
        }
        return out;
    }

    [[nodiscard]] Laurent theta() const {
        Laurent out(p_);
        for (const auto& [e, c] : terms_) out.add_term(e.times_sqrt_p(p_), c);
        return out;
    }

    /// Inverse of a monomial; general inverses are infinite series.
    [[nodiscard]] Laurent inverse() const {
        if (!is_monomial()) throw std::domain_error("Laurent: only monomials are invertible in finite-support series");
        const auto& [e, c] = *terms_.begin();
        return monomial(p_, -e, c);  // c * c = 1 in F_2 and F_3
    }

    /// Terms like "x^{a+b r}" (r = sqrt p) joined by " + ", coefficient 2 as "2*".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += std::to_string(c) + "*";
            s += "x^{" + std::to_string(e.a()) + (e.b() < 0 ? "-" : "+") + std::to_string(e.b() < 0 ? -e.b() : e.b()) + "r}";
        }
        return s;
    }

    /// Inverse of str(); also accepts "0", "1", "x", "x^3" and terms "x^{a}", "x^{b r}".
    static Laurent parse(const std::string& text, int p) {
        Laurent out(p);
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::invalid_argument("Laurent: empty literal");
        std::size_t i = 0;
        auto fail = [&](const std::string& why) {
            return std::invalid_argument("Laurent: bad literal '" + text + "': " + why);
        };
        auto read_int = [&](std::int64_t& v) {
            std::size_t start = i;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            std::string tok = s.substr(start, i - start);
            if (tok.empty() || tok == "-" || tok == "+") return false;
            v = std::stoll(tok);
            return true;
        };
        while (i < s.size()) {
            int coeff = 1;
            std::int64_t lead = 0;
            bool have_lead = false;
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                read_int(lead);
                have_lead = true;
                if (i < s.size() && s[i] == '*') ++i;
            }
            Exponent e(0, 0, p);
            if (i < s.size() && s[i] == 'x') {
                ++i;
                if (have_lead) coeff = static_cast<int>(((lead % p) + p) % p);
                std::int64_t a = 1, b = 0;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    if (i < s.size() && s[i] == '{') {
                        auto close = s.find('}', i);
                        if (close == std::string::npos) throw fail("missing '}'");
                        e = parse_exponent(s.substr(i + 1, close - i - 1), p, text);
                        i = close + 1;
                        a = e.a();
                        b = e.b();
                    } else if (!read_int(a)) {
                        throw fail("missing exponent");
                    }
                }
                e = Exponent(a, b, p);
            } else if (have_lead) {
                coeff = static_cast<int>(((lead % p) + p) % p);
            } else {
                throw fail("expected a term");
            }
            out.add_term(e, coeff);
            if (i < s.size()) {
                if (s[i] != '+') throw fail("terms must be joined by '+'");
                ++i;
                if (i == s.size()) throw fail("trailing '+'");
            }
        }
        return out;
    }

private:
    static int check_p(int p) {
        if (p != 2 && p != 3) throw std::invalid_argument("Laurent: characteristic must be 2 or 3");
        return p;
    }
    // "a+b r", "a-b r", "a", "b r", "r", "-r"
    static Exponent parse_exponent(const std::string& s, int p, const std::string& text) {
        auto r = s.find('r');
        try {
            if (r == std::string::npos) return Exponent(std::stoll(s), 0, p);
            if (r + 1 != s.size()) throw std::invalid_argument("text after r");
            std::string head = s.substr(0, r);
            std::size_t split = std::string::npos;
            for (std::size_t k = head.size(); k-- > 1;)
                if (head[k] == '+' || head[k] == '-') {
                    split = k;
                    break;
                }
            auto coef = [](const std::string& t) -> std::int64_t {
                if (t.empty() || t == "+") return 1;
                if (t == "-") return -1;
                return std::stoll(t);
            };
            if (split == std::string::npos) return Exponent(0, coef(head), p);
            return Exponent(std::stoll(head.substr(0, split)), coef(head.substr(split)), p);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("Laurent: bad exponent in '" + text + "'");
        }
    }
    void require_same(const Laurent& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Laurent: mixing characteristics");
    }
    void add_term(const Exponent& e, int c) {
        int& slot = terms_[Exponent(e.a(), e.b(), p_)];
        slot = ((slot + c) % p_ + p_) % p_;
        if (slot == 0) terms_.erase(Exponent(e.a(), e.b(), p_));
    }

    int p_;
    std::map<Exponent, int> terms_;
};

namespace detail {
inline NormValue scale_nu(const QuadraticInteger& c, const NormValue& v) {
    return v.is_infinite() ? v : NormValue(c * v.value());
}
inline NormValue min_nu(std::initializer_list<NormValue> l) { return std::min(l); }
inline void require_char(const Laurent& x, int p, const char* what) {
    if (x.p() != p) throw std::invalid_argument(std::string(what) + ": wrong characteristic");
}
}  // namespace detail

/// R(s,t) = t^{theta+2} + s t + s^theta (char 2).
inline Laurent norm_R(const Laurent& s, const Laurent& t) {
    detail::require_char(s, 2, "norm_R");
    detail::require_char(t, 2, "norm_R");
    return t.theta() * t * t + s * t + s.theta();
}

/// N(r,s,t) = r^{theta+1} s^theta - r t^theta - r^{theta+3} s - r^2 s^2 + s^{theta+1} + t^2 - r^{2theta+4} (char 3).
inline Laurent norm_N(const Laurent& r, const Laurent& s, const Laurent& t) {
    for (const auto* x : {&r, &s, &t}) detail::require_char(*x, 3, "norm_N");
    Laurent rt = r.theta();
    return rt * r * s.theta() - r * t.theta() - rt * r.pow(3) * s - r * r * s * s + s.theta() * s + t * t -
           rt * rt * r.pow(4);
}

/// Element (s, t) of the char-2 group with (s,t)(u,v) = (s + u + t^theta v, t + v).
struct GroupK {
    Laurent s{2}, t{2};
    static GroupK identity() { return {}; }
    friend GroupK operator*(const GroupK& g, const GroupK& h) { return {g.s + h.s + g.t.theta() * h.t, g.t + h.t}; }
    [[nodiscard]] GroupK inverse() const { return {s + t.theta() * t, t}; }
    friend bool operator==(const GroupK&, const GroupK&) = default;
};

/// Element (r, s, t) of the char-3 group with
/// (r,s,t)(w,u,v) = (r + w, s + u + r^theta w, t + v - r u + s w - r^{theta+1} w).
struct GroupT {
    Laurent r{3}, s{3}, t{3};
    static GroupT identity() { return {}; }
    friend GroupT operator*(const GroupT& g, const GroupT& h) {
        Laurent rt = g.r.theta();
        return {g.r + h.r, g.s + h.s + rt * h.r, g.t + h.t - g.r * h.s + g.s * h.r - rt * g.r * h.r};
    }
    [[nodiscard]] GroupT inverse() const { return {-r, -s + r.theta() * r, -t}; }
    friend bool operator==(const GroupT&, const GroupT&) = default;
};

inline NormValue phi_K(const GroupK& g) { return norm_R(g.s, g.t).nu(); }
inline NormValue phi_T(const GroupT& g) { return norm_N(g.r, g.s, g.t).nu(); }

/// min{sqrt2 nu(s), (sqrt2 + 2) nu(t)}
inline NormValue nu_R_closed(const Laurent& s, const Laurent& t) {
    return detail::min_nu({detail::scale_nu(Exponent(0, 1, 2), s.nu()), detail::scale_nu(Exponent(2, 1, 2), t.nu())});
}

/// min{(2 sqrt3 + 4) nu(r), (sqrt3 + 1) nu(s), 2 nu(t)}
inline NormValue nu_N_closed(const Laurent& r, const Laurent& s, const Laurent& t) {
    return detail::min_nu({detail::scale_nu(Exponent(4, 2, 3), r.nu()), detail::scale_nu(Exponent(1, 1, 3), s.nu()),
                           detail::scale_nu(Exponent(2, 0, 3), t.nu())});
}

/// Conjugation by h(param) on the char-2 group: (u, v) -> (u R^theta, v R^{2-theta}), R = R(param).
inline GroupK scaling_K(const GroupK& param, const GroupK& g) {
    Laurent R = norm_R(param.s, param.t);
    if (!R.is_monomial()) throw std::invalid_argument("scaling_K: R(param) must be a monomial (finite-support inverses only)");
    Laurent Rt = R.theta();
    return {g.s * Rt, g.t * R * R * Rt.inverse()};
}

/// Conjugation by h(param) on the char-3 group: (w, u, v) -> (w N^{2-theta}, u N^{theta-1}, v N).
inline GroupT scaling_T(const GroupT& param, const GroupT& g) {
    Laurent N = norm_N(param.r, param.s, param.t);
    if (!N.is_monomial()) throw std::invalid_argument("scaling_T: N(param) must be a monomial (finite-support inverses only)");
    Laurent Nt = N.theta(), Ninv = N.inverse();
    return {g.r * N * N * Nt.inverse(), g.s * Nt * Ninv, g.t * N};
}

/// sqrt(2 + sqrt2) nu(k) as an element of Q(zeta), zeta = sqrt(2 + sqrt2),
/// using sqrt2 = zeta^2 - 2. nullopt encodes +inf (k = 0).
inline std::optional<NumberFieldElem> odd_root_valuation(const Laurent& k) {
    detail::require_char(k, 2, "odd_root_valuation");
    if (k.is_zero()) return std::nullopt;
    auto f = fields::sqrt_2_plus_sqrt2();
    auto zeta = NumberFieldElem::generator(f);
    const Exponent v = k.nu().value();
    NumberFieldElem sqrt2 = zeta * zeta - NumberFieldElem(f, {Rational(2)});
    return zeta * (NumberFieldElem(f, {Rational(v.a())}) + NumberFieldElem(f, {Rational(v.b())}) * sqrt2);
}

/// Sum of a_ij s^i t^j over F_p with i, j >= 0, nu(s) = 1 and nu(t) = sqrt p.
class TwoVarPoly {
public:
    explicit TwoVarPoly(int p = 2) : p_(p) {
        if (p != 2 && p != 3) throw std::invalid_argument("TwoVarPoly: characteristic must be 2 or 3");
    }
    static TwoVarPoly monomial(int p, std::int64_t i, std::int64_t j, int c = 1) {
        if (i < 0 || j < 0) throw std::invalid_argument("TwoVarPoly: negative exponent");
        TwoVarPoly q(p);
        q.add(i, j, c);
        return q;
    }
    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<std::pair<std::int64_t, std::int64_t>, int>& terms() const { return terms_; }

    [[nodiscard]] NormValue nu() const {
        NormValue best = NormValue::infinity();
        for (const auto& [ij, c] : terms_) best = std::min(best, NormValue(Exponent(ij.first, ij.second, p_)));
        return best;
    }
    /// s^i t^j -> t^i s^{p j}
    [[nodiscard]] TwoVarPoly theta() const {
        TwoVarPoly q(p_);
        for (const auto& [ij, c] : terms_) q.add(p_ * ij.second, ij.first, c);
        return q;
    }
    friend TwoVarPoly operator+(const TwoVarPoly& x, const TwoVarPoly& y) {
        TwoVarPoly out = x;
        for (const auto& [ij, c] : y.terms_) out.add(ij.first, ij.second, c);
        return out;
    }
    friend TwoVarPoly operator*(const TwoVarPoly& x, const TwoVarPoly& y) {
        TwoVarPoly out(x.p_);
        for (const auto& [a, c1] : x.terms_)
            for (const auto& [b, c2] : y.terms_) out.add(a.first + b.first, a.second + b.second, c1 * c2);
        return out;
    }
    friend bool operator==(const TwoVarPoly&, const TwoVarPoly&) = default;

private:
    void add(std::int64_t i, std::int64_t j, int c) {
        int& slot = terms_[{i, j}];
        slot = ((slot + c) % p_ + p_) % p_;
        if (slot == 0) terms_.erase({i, j});
    }
    int p_;
    std::map<std::pair<std::int64_t, std::int64_t>, int> terms_;
};

/// nu(P/Q) = nu(P) - nu(Q).
inline NormValue valuation_2var(const TwoVarPoly& num, const TwoVarPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("valuation_2var: zero denominator");
    if (num.is_zero()) return NormValue::infinity();
    return NormValue(num.nu().value() - den.nu().value());
}

/// Random Laurent element with up to `terms` terms, exponents a + b sqrt p, |a|, |b| <= range.
inline Laurent random_laurent(std::mt19937_64& rng, int p, int terms, int range) {
    std::uniform_int_distribution<int> n(0, terms), e(-range, range), c(1, p - 1);
    Laurent x(p);
    for (int k = n(rng); k > 0; --k) x = x + Laurent::monomial(p, e(rng), e(rng), c(rng));
    return x;
}

struct V1Report {
    std::size_t qualifying = 0;
    std::size_t pairs = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Closure of {phi >= k} under products and inverses, on sampled elements.
/// Samples are random; those with phi < k are discarded.
template <class G, class Phi, class Gen>
V1Report check_V1(const NormValue& k, std::size_t samples, std::mt19937_64& rng, Phi phi, Gen gen) {
    V1Report rep;
    std::vector<G> pool{G::identity()};
    for (std::size_t i = 0; i < 20 * samples && pool.size() < 64; ++i) {
        G g = gen(rng);
        if (phi(g) >= k) pool.push_back(g);
    }
    rep.qualifying = pool.size();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const G& g = pool[pick(rng)];
        const G& h = pool[pick(rng)];
        ++rep.pairs;
        if (!(phi(g * h) >= k)) rep.failures.push_back("phi(g*h) = " + phi(g * h).str());
        if (!(phi(g.inverse()) >= k)) rep.failures.push_back("phi(g^-1) = " + phi(g.inverse()).str());
    }
    return rep;
}

}  // namespace weylkit
