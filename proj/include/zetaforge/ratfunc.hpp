#pragma once

// Exact rational functions over Q in the project's generator set, kept in
// reduced canonical form: gcd(num, den) = 1, numerator and denominator are
// integer polynomials with coprime contents, denominator leading coefficient
// positive. Negative powers of any variable are monomial denominators.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "polygcd.hpp"

namespace zetaforge {

class RatFunc {
public:
    RatFunc() : num_(), den_(MultiPoly::one()) {}
    RatFunc(const Rational& c) // NOLINT(google-explicit-constructor)
        : num_(MultiPoly(Rational(c.numerator()))), den_(MultiPoly(Rational(c.denominator()))) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}                                   // NOLINT
    explicit RatFunc(const MultiPoly& p) : num_(p), den_(MultiPoly::one()) { reduce(); }
    RatFunc(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        reduce();
    }

    static RatFunc var(VarId v) { return RatFunc(MultiPoly::var_pow(v, 1)); }

    // c * prod(generator_i ^ exps[i]) with signed stored exponents.
    static RatFunc laurent(const Rational& c, const std::array<int, kNumSlots>& exps) {
        if (c.is_zero()) return RatFunc();
        Monomial mn, md;
        for (int i = 0; i < kNumSlots; ++i) {
            if (exps[i] >= 0) mn.e[i] = exps[i];
            else md.e[i] = -exps[i];
        }
        return RatFunc(MultiPoly(c, mn), MultiPoly(Rational(1), md));
    }

    // q^e for rational e with denominator dividing 4.
    static RatFunc q_power(const Rational& e) {
        Rational stored = e * Rational(kUnitQ);
        if (!stored.is_integer()) throw ContractViolation("q exponent requires denominator | 4: " + e.to_string());
        std::array<int, kNumSlots> x{};
        x[kSlotQ] = static_cast<int>(stored.numerator());
        return laurent(Rational(1), x);
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw ContractViolation("constant_value on non-constant RatFunc");
        if (num_.is_zero()) return Rational(0);
        return num_.constant_value() / den_.constant_value();
    }
    bool uses_slot(int slot) const { return num_.uses_slot(slot) || den_.uses_slot(slot); }

    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    // Henrici: with both operands reduced, only denominator gcds are needed
    // and the result is reduced by construction.
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        MultiPoly g = poly_gcd(a.den_, b.den_);
        if (g.is_constant()) {
            return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, reduced_tag{});
        }
        MultiPoly ad = exact(a.den_, g), bd = exact(b.den_, g);
        MultiPoly t = a.num_ * bd + b.num_ * ad;
        if (t.is_zero()) return RatFunc();
        MultiPoly h = poly_gcd(t, g);
        if (h.is_constant()) return RatFunc(t, ad * b.den_, reduced_tag{});
        return RatFunc(exact(t, h), ad * exact(b.den_, h), reduced_tag{});
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    // cross-cancellation keeps products reduced without a final gcd
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        MultiPoly g1 = poly_gcd(a.num_, b.den_);
        MultiPoly g2 = poly_gcd(b.num_, a.den_);
        return RatFunc(exact(a.num_, g1) * exact(b.num_, g2),
                       exact(a.den_, g2) * exact(b.den_, g1), reduced_tag{});
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        if (a.is_zero()) return RatFunc();
        MultiPoly g1 = poly_gcd(a.num_, b.num_);
        MultiPoly g2 = poly_gcd(b.den_, a.den_);
        return RatFunc(exact(a.num_, g1) * exact(b.den_, g2),
                       exact(a.den_, g2) * exact(b.num_, g1), reduced_tag{});
    }
    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
    RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

    RatFunc pow(int e) const {
        if (e == 0) return RatFunc(Rational(1));
        bool inv = e < 0;
        int k = inv ? -e : e;
        // num and den are coprime, so powers need no reduction at all
        MultiPoly n = num_, d = den_, rn = MultiPoly::one(), rd = MultiPoly::one();
        while (k > 0) {
            if (k & 1) { rn *= n; rd *= d; }
            k >>= 1;
            if (k) { n *= n; d *= d; }
        }
        if (inv) {
            if (rn.is_zero()) throw DivisionByZero("inverting zero rational function");
            return RatFunc(rd, rn, reduced_tag{});
        }
        return RatFunc(rn, rd, reduced_tag{});
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // --- nominal-variable views -------------------------------------------

    bool integral_in(VarId v) const {
        int slot = v.slot(), unit = v.unit();
        for (const auto& t : num_.terms()) if (t.m.e[slot] % unit) return false;
        for (const auto& t : den_.terms()) if (t.m.e[slot] % unit) return false;
        return true;
    }

    // Dense coefficients of a polynomial by nominal power of v (entries free of v).
    static std::vector<RatFunc> poly_nominal_coeffs(const MultiPoly& p, VarId v) {
        int slot = v.slot(), unit = v.unit();
        int deg = p.degree_in_slot(slot);
        if (deg % unit) throw ContractViolation("polynomial not integral in " + v.name());
        std::vector<MultiPoly> out(static_cast<std::size_t>(deg / unit) + 1);
        for (const auto& t : p.terms()) {
            if (t.m.e[slot] % unit) throw ContractViolation("polynomial not integral in " + v.name());
            Monomial m = t.m;
            int d = m.e[slot] / unit;
            m.e[slot] = 0;
            out[static_cast<std::size_t>(d)] += MultiPoly(t.c, m);
        }
        std::vector<RatFunc> r;
        r.reserve(out.size());
        for (auto& c : out) r.emplace_back(RatFunc(c));
        return r;
    }

    // d/dv for v-integral functions.
    RatFunc derivative_nominal(VarId v) const {
        MultiPoly dn = poly_derivative_nominal(num_, v);
        MultiPoly dd = poly_derivative_nominal(den_, v);
        return RatFunc(dn * den_ - num_ * dd, den_ * den_);
    }

    // f with v := g (v-integral f; any g). Throws DenominatorVanishes when the
    // denominator collapses identically.
    RatFunc substitute(VarId v, const RatFunc& g) const {
        RatFunc n = horner(poly_nominal_coeffs(num_, v), g);
        RatFunc d = horner(poly_nominal_coeffs(den_, v), g);
        if (d.is_zero()) throw DenominatorVanishes("substitution for " + v.name() + " kills the denominator");
        return n / d;
    }

    // Exact specialization v := value (rational), for v-integral functions.
    RatFunc substitute_value(VarId v, const Rational& val) const {
        MultiPoly n = poly_substitute_value(num_, v, val);
        MultiPoly d = poly_substitute_value(den_, v, val);
        if (d.is_zero()) throw DenominatorVanishes("specializing " + v.name() + " kills the denominator");
        return RatFunc(n, d);
    }

    // Generator-level monomial substitution:
    //   gen_slot^k  ->  coef^(k/step) * prod_i gen_i^((k/step)*exps[i])
    // (requires step | k for every occurring k). Covers functional-equation
    // reflections, central shifts, and variable rescalings exactly.
    RatFunc subst_slot_laurent(int slot, int step, const Rational& coef,
                               const std::array<int, kNumSlots>& exps) const {
        if (coef.is_zero()) throw ContractViolation("zero coefficient in monomial substitution");
        RatFunc n = poly_subst_slot_laurent(num_, slot, step, coef, exps);
        RatFunc d = poly_subst_slot_laurent(den_, slot, step, coef, exps);
        if (d.is_zero()) throw DenominatorVanishes("monomial substitution kills the denominator");
        return n / d;
    }

    // --- local analysis in one variable ------------------------------------

    // Order of vanishing of den minus num at v = point (>= 0; 0 means regular).
    int pole_order(VarId v, const RatFunc& point) const {
        if (is_zero()) return 0;
        int vn = valuation_at(poly_nominal_coeffs(num_, v), point);
        int vd = valuation_at(poly_nominal_coeffs(den_, v), point);
        return std::max(0, vd - vn);
    }

    // Res_{v=point} f by the (k-1)-st derivative formula.
    RatFunc residue(VarId v, const RatFunc& point) const {
        int k = pole_order(v, point);
        if (k == 0) return RatFunc();
        RatFunc g = *this * (var(v) - point).pow(k);
        Rational fact(1);
        for (int i = 1; i < k; ++i) {
            g = g.derivative_nominal(v);
            fact = fact * Rational(i);
        }
        RatFunc val = g.substitute(v, point);
        return val / RatFunc(fact);
    }

    // Laurent coefficients of f around v = point: returns c[0..count-1] with
    // f = sum_j c[j] * (v - point)^(from + j) + regular-tail terms.
    std::vector<RatFunc> laurent_coeffs(VarId v, const RatFunc& point, int from, int count) const {
        std::vector<RatFunc> out(static_cast<std::size_t>(count), RatFunc());
        if (is_zero() || count <= 0) return out;
        std::vector<RatFunc> a = taylor_shift(poly_nominal_coeffs(num_, v), point);
        std::vector<RatFunc> b = taylor_shift(poly_nominal_coeffs(den_, v), point);
        int vn = first_nonzero(a);
        int vd = first_nonzero(b);
        if (vd < 0) throw NonIsolatedPole("denominator identically zero in series expansion");
        int lead = vn - vd; // lowest potential exponent of the expansion
        int need = (from + count - 1) - lead + 1;
        if (need <= 0) return out;
        // series division (a shifted by vn) / (b shifted by vd)
        std::vector<RatFunc> s(static_cast<std::size_t>(need), RatFunc());
        const RatFunc& b0 = b[static_cast<std::size_t>(vd)];
        for (int j = 0; j < need; ++j) {
            RatFunc acc = (vn + j < static_cast<int>(a.size())) ? a[static_cast<std::size_t>(vn + j)] : RatFunc();
            for (int i = 0; i < j; ++i) {
                int bi = vd + (j - i);
                if (bi < static_cast<int>(b.size()))
                    acc -= s[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(bi)];
            }
            s[static_cast<std::size_t>(j)] = acc / b0;
        }
        for (int i = 0; i < count; ++i) {
            int j = (from + i) - lead;
            if (j >= 0 && j < need) out[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(j)];
        }
        return out;
    }

    std::string to_string() const {
        if (den_ == MultiPoly::one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    MultiPoly num_, den_;

    struct reduced_tag {};
    // trusted path: polynomial parts already coprime, only contents to fix
    RatFunc(MultiPoly n, MultiPoly d, reduced_tag) : num_(std::move(n)), den_(std::move(d)) {
        normalize_content();
    }

    static MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
        if (b.is_constant()) {
            Rational c = b.constant_value();
            return c.is_one() ? a : a.scale(Rational(1) / c);
        }
        auto q = divide_exact(a, b);
        if (!q) throw ContractViolation("expected exact polynomial division");
        return *q;
    }

    void normalize_content() {
        if (num_.is_zero()) {
            den_ = MultiPoly::one();
            return;
        }
        Rational cn = num_.rat_content();
        Rational cd = den_.rat_content();
        Rational ratio = cn / cd;
        num_ = num_.scale(Rational(1) / cn).scale(Rational(ratio.numerator()));
        den_ = den_.scale(Rational(1) / cd).scale(Rational(ratio.denominator()));
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = MultiPoly::one();
            return;
        }
        MultiPoly g = poly_gcd(num_, den_);
        if (!(g.is_constant() && g.constant_value().is_one())) {
            num_ = exact(num_, g);
            den_ = exact(den_, g);
        }
        normalize_content();
    }

    static MultiPoly poly_derivative_nominal(const MultiPoly& p, VarId v) {
        int slot = v.slot(), unit = v.unit();
        MultiPoly r;
        for (const auto& t : p.terms()) {
            if (t.m.e[slot] % unit) throw ContractViolation("derivative of non-integral power in " + v.name());
            int d = t.m.e[slot] / unit;
            if (d == 0) continue;
            Monomial m = t.m;
            m.e[slot] -= unit;
            r += MultiPoly(t.c * Rational(d), m);
        }
        return r;
    }

    static MultiPoly poly_substitute_value(const MultiPoly& p, VarId v, const Rational& val) {
        int slot = v.slot(), unit = v.unit();
        MultiPoly r;
        for (const auto& t : p.terms()) {
            if (t.m.e[slot] % unit) throw ContractViolation("specializing non-integral power in " + v.name());
            int d = t.m.e[slot] / unit;
            Monomial m = t.m;
            m.e[slot] = 0;
            r += MultiPoly(t.c * val.pow(d), m);
        }
        return r;
    }

    static RatFunc poly_subst_slot_laurent(const MultiPoly& p, int slot, int step, const Rational& coef,
                                           const std::array<int, kNumSlots>& exps) {
        // Accumulate with signed exponents, then split off a monomial denominator.
        std::map<std::array<int64_t, kNumSlots>, Rational> acc;
        for (const auto& t : p.terms()) {
            int k = t.m.e[slot];
            if (k % step) throw ContractViolation("substitution step does not divide exponent");
            int kk = k / step;
            std::array<int64_t, kNumSlots> e{};
            for (int i = 0; i < kNumSlots; ++i) e[i] = t.m.e[i];
            e[slot] = 0;
            for (int i = 0; i < kNumSlots; ++i) e[i] += static_cast<int64_t>(kk) * exps[i];
            Rational c = t.c * coef.pow(kk);
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, c);
            else it->second += c;
        }
        std::array<int64_t, kNumSlots> mins{};
        for (const auto& [e, c] : acc)
            for (int i = 0; i < kNumSlots; ++i) mins[i] = std::min(mins[i], e[i]);
        MultiPoly n;
        for (const auto& [e, c] : acc) {
            if (c.is_zero()) continue;
            Monomial m;
            for (int i = 0; i < kNumSlots; ++i) m.e[i] = static_cast<int32_t>(e[i] - mins[i]);
            n += MultiPoly(c, m);
        }
        Monomial dm;
        for (int i = 0; i < kNumSlots; ++i) dm.e[i] = static_cast<int32_t>(-mins[i]);
        return RatFunc(n, MultiPoly(Rational(1), dm));
    }

    static RatFunc horner(const std::vector<RatFunc>& coeffs, const RatFunc& g) {
        RatFunc r;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * g + *it;
        return r;
    }

    static int first_nonzero(const std::vector<RatFunc>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    // Coefficients of P(y + point) from coefficients of P(v).
    static std::vector<RatFunc> taylor_shift(std::vector<RatFunc> c, const RatFunc& point) {
        int n = static_cast<int>(c.size());
        for (int i = 0; i < n; ++i)
            for (int j = n - 2; j >= i; --j)
                c[static_cast<std::size_t>(j)] += point * c[static_cast<std::size_t>(j + 1)];
        return c;
    }

    static int valuation_at(std::vector<RatFunc> c, const RatFunc& point) {
        // repeated synthetic division by (v - point); valuation at v = point
        int val = 0;
        while (true) {
            bool allz = true;
            for (const auto& e : c)
                if (!e.is_zero()) { allz = false; break; }
            if (allz) throw ContractViolation("valuation of the zero polynomial");
            if (c.size() == 1) return val; // nonzero constant
            int n = static_cast<int>(c.size()) - 1;
            std::vector<RatFunc> q(static_cast<std::size_t>(n));
            RatFunc carry = c[static_cast<std::size_t>(n)];
            for (int j = n - 1; j >= 0; --j) {
                q[static_cast<std::size_t>(j)] = carry;
                carry = c[static_cast<std::size_t>(j)] + point * carry;
            }
            if (!carry.is_zero()) return val;
            c = std::move(q);
            ++val;
        }
    }
};

inline RatFunc operator*(const Rational& a, const RatFunc& b) { return RatFunc(a) * b; }
inline RatFunc operator*(const RatFunc& a, const Rational& b) { return a * RatFunc(b); }

} // namespace zetaforge
