#pragma once

// Sparse multivariate polynomials over Q in the fixed generator set
//
//   slot 0  Qg  = q^(1/4)
//   slot 1  L   = ln q (formal)
//   slot 2+ Xi  = x_i^(1/2),  x_i = q^(-lambda_i)
//   last    Tau = t^(1/2),    t = q^(-s)
//
// Exponents are nonnegative integers in these *fractional units*: q carries
// unit 1/4 and the x/t variables unit 1/2, so half-integer functional-equation
// shifts and rescalings stay exact integer exponent arithmetic. Negative
// powers live in RatFunc denominators, never here.
//
// Terms are kept sorted in descending graded-lex order (grade = total stored
// degree, ties broken by slot 0,1,2,... exponents); this is the canonical
// order used by every serialization.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "rational.hpp"

namespace zetaforge {

inline constexpr int kMaxRank = 4;
inline constexpr int kNumSlots = 2 + kMaxRank + 1; // Qg, L, X0..X3, Tau
inline constexpr int kSlotQ = 0;
inline constexpr int kSlotL = 1;
inline constexpr int kSlotX0 = 2;
inline constexpr int kSlotT = 2 + kMaxRank;

// Stored exponent units: nominal exponent * unit = stored exponent.
inline constexpr int kUnitQ = 4;
inline constexpr int kUnitX = 2;
inline constexpr int kUnitT = 2;

struct VarId {
    enum Kind : uint8_t { Q, LOGQ, X, T };
    Kind kind = Q;
    int index = 0; // only for X

    static VarId q() { return {Q, 0}; }
    static VarId logq() { return {LOGQ, 0}; }
    static VarId x(int i) { return {X, i}; }
    static VarId t() { return {T, 0}; }

    int slot() const {
        switch (kind) {
            case Q: return kSlotQ;
            case LOGQ: return kSlotL;
            case X:
                if (index < 0 || index >= kMaxRank) throw ContractViolation("x index out of range");
                return kSlotX0 + index;
            case T: return kSlotT;
        }
        throw ContractViolation("bad VarId");
    }
    // Stored units per nominal unit of this variable.
    int unit() const {
        switch (kind) {
            case Q: return kUnitQ;
            case LOGQ: return 1;
            case X: return kUnitX;
            case T: return kUnitT;
        }
        throw ContractViolation("bad VarId");
    }
    std::string name() const {
        switch (kind) {
            case Q: return "q";
            case LOGQ: return "L";
            case X: return "x" + std::to_string(index);
            case T: return "t";
        }
        return "?";
    }
    friend bool operator==(const VarId& a, const VarId& b) { return a.kind == b.kind && a.index == b.index; }
};

inline int slot_unit(int slot) {
    if (slot == kSlotQ) return kUnitQ;
    if (slot == kSlotL) return 1;
    if (slot == kSlotT) return kUnitT;
    return kUnitX;
}

inline std::string slot_name(int slot) {
    if (slot == kSlotQ) return "q";
    if (slot == kSlotL) return "L";
    if (slot == kSlotT) return "t";
    return "x" + std::to_string(slot - kSlotX0);
}

struct Monomial {
    std::array<int32_t, kNumSlots> e{}; // all zero-initialized

    int32_t total() const {
        int32_t s = 0;
        for (auto v : e) s += v;
        return s;
    }
    bool is_one() const {
        for (auto v : e) if (v != 0) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumSlots; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    // Exact divisibility (componentwise).
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumSlots; ++i) if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial divide(const Monomial& o) const { // *this / o
        Monomial r;
        for (int i = 0; i < kNumSlots; ++i) {
            r.e[i] = e[i] - o.e[i];
            if (r.e[i] < 0) throw ContractViolation("monomial division underflow");
        }
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Descending graded-lex: returns true when a comes after b (a < b in grlex).
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int32_t ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (int i = 0; i < kNumSlots; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

class MultiPoly {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_.push_back({Monomial{}, c});
    }
    MultiPoly(const Rational& c, const Monomial& m) {
        if (!c.is_zero()) terms_.push_back({m, c});
    }
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(Rational(1)); }
    // Single variable to a nominal power >= 0 (stored exponent = power * unit).
    static MultiPoly var_pow(VarId v, int nominal_power) {
        if (nominal_power < 0) throw ContractViolation("negative exponent in MultiPoly");
        Monomial m;
        m.e[v.slot()] = nominal_power * v.unit();
        return MultiPoly(Rational(1), m);
    }
    // Single generator (fractional-unit) power.
    static MultiPoly gen_pow(int slot, int stored_exp, const Rational& c = Rational(1)) {
        if (stored_exp < 0) throw ContractViolation("negative exponent in MultiPoly");
        Monomial m;
        m.e[slot] = stored_exp;
        return MultiPoly(c, m);
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw ContractViolation("constant_value on non-constant poly");
        return terms_[0].c;
    }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw ContractViolation("leading term of zero poly");
        return terms_[0].m;
    }
    const Rational& leading_coeff() const {
        if (terms_.empty()) throw ContractViolation("leading coeff of zero poly");
        return terms_[0].c;
    }

    int degree_in_slot(int slot) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max<int>(d, t.m.e[slot]);
        return d;
    }
    bool uses_slot(int slot) const {
        for (const auto& t : terms_) if (t.m.e[slot] != 0) return true;
        return false;
    }
    int highest_used_slot() const { // -1 if constant
        int hi = -1;
        for (const auto& t : terms_)
            for (int i = kNumSlots - 1; i > hi; --i)
                if (t.m.e[i] != 0) { hi = i; break; }
        return hi;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r = a;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const auto& ta = a.terms_[i];
            const auto& tb = b.terms_[j];
            if (ta.m == tb.m) {
                Rational c = ta.c + tb.c;
                if (!c.is_zero()) r.terms_.push_back({ta.m, c});
                ++i; ++j;
            } else if (grlex_less(tb.m, ta.m)) {
                r.terms_.push_back(ta);
                ++i;
            } else {
                r.terms_.push_back(tb);
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return MultiPoly();
        if (a.terms_.size() == 1) return b.mul_term(a.terms_[0]);
        if (b.terms_.size() == 1) return a.mul_term(b.terms_[0]);
        std::map<Monomial, Rational, decltype(&grlex_less)> acc(&grlex_less);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.m * tb.m;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(m, ta.c * tb.c);
                else it->second += ta.c * tb.c;
            }
        MultiPoly r;
        r.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
    MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
    MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

    MultiPoly scale(const Rational& c) const {
        if (c.is_zero()) return MultiPoly();
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.c = t.c * c;
        return r;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw ContractViolation("MultiPoly::pow negative");
        MultiPoly r = one();
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Componentwise-minimum exponent vector over all terms (the monomial
    // content); undefined on the zero polynomial.
    Monomial monomial_content() const {
        if (terms_.empty()) throw ContractViolation("monomial content of zero poly");
        Monomial m = terms_[0].m;
        for (const auto& t : terms_)
            for (int i = 0; i < kNumSlots; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
        return m;
    }
    MultiPoly divide_monomial(const Monomial& m) const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.m = t.m.divide(m);
        return r;
    }

    // Signed rational content: f = rat_content(f) * integer-primitive part
    // with positive leading coefficient.
    Rational rat_content() const {
        if (terms_.empty()) return Rational(0);
        Rational g(0);
        for (const auto& t : terms_) g = gcd(g, t.c);
        if (terms_[0].c.sign() < 0) g = -g;
        return g;
    }
    MultiPoly rat_primitive() const {
        if (terms_.empty()) return MultiPoly();
        return scale(Rational(1) / rat_content());
    }

    // Dense coefficient vector (by stored exponent) viewing the poly as
    // univariate in `slot`; coefficients are polys in the other slots.
    std::vector<MultiPoly> coeffs_in_slot(int slot) const {
        std::vector<MultiPoly> out(static_cast<std::size_t>(degree_in_slot(slot)) + 1);
        for (const auto& t : terms_) {
            Monomial m = t.m;
            int d = m.e[slot];
            m.e[slot] = 0;
            out[static_cast<std::size_t>(d)] += MultiPoly(t.c, m);
        }
        if (is_zero()) out.assign(1, MultiPoly());
        return out;
    }
    static MultiPoly from_coeffs_in_slot(int slot, const std::vector<MultiPoly>& cs) {
        MultiPoly r;
        for (std::size_t d = 0; d < cs.size(); ++d) {
            if (cs[d].is_zero()) continue;
            Monomial shift;
            shift.e[slot] = static_cast<int32_t>(d);
            r += cs[d].mul_monomial(shift);
        }
        return r;
    }

    MultiPoly mul_monomial(const Monomial& m) const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.m = t.m * m;
        return r;
    }

    // d/d(generator of slot): formal derivative in the stored generator.
    MultiPoly derivative_slot(int slot) const {
        MultiPoly r;
        for (const auto& t : terms_) {
            if (t.m.e[slot] == 0) continue;
            Term nt = t;
            nt.c = t.c * Rational(t.m.e[slot]);
            nt.m.e[slot] -= 1;
            r.terms_.push_back(nt);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_less(b.m, a.m); });
        return r;
    }

    // Exact substitution of a rational value for the *generator* of a slot.
    MultiPoly substitute_slot_value(int slot, const Rational& val) const {
        MultiPoly r;
        for (const auto& t : terms_) {
            Monomial m = t.m;
            int d = m.e[slot];
            m.e[slot] = 0;
            r += MultiPoly(t.c * val.pow(d), m);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << t.c.pretty();
            for (int i = 0; i < kNumSlots; ++i) {
                if (t.m.e[i] == 0) continue;
                int u = slot_unit(i);
                os << "*" << slot_name(i);
                if (t.m.e[i] != u) {
                    if (t.m.e[i] % u == 0) os << "^" << (t.m.e[i] / u);
                    else os << "^(" << t.m.e[i] << "/" << u << ")";
                }
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_; // descending grlex, no zero coefficients
    MultiPoly mul_term(const Term& t) const {
        MultiPoly r = *this;
        for (auto& rt : r.terms_) {
            rt.m = rt.m * t.m;
            rt.c = rt.c * t.c;
        }
        return r;
    }
};

} // namespace zetaforge
