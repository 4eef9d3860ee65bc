#pragma once

// Curve data over F_q and the completed zeta as a reusable rational-function
// atom. The completion is fixed as  zhat(s) = q^((g-1)s) Z(q^-s), the unique
// monomial completion with functional equation zhat(1-s) = zhat(s).

#include <string>
#include <vector>

#include "common.hpp"
#include "ratfunc.hpp"
#include "root_system.hpp"

namespace zetaforge {

struct CurveData {
    Rational q;                              // integer-valued prime power
    int genus = 0;
    std::vector<Rational> numerator_coeffs;  // a_0..a_{2g}, a_0 = 1
    Rational class_number;                   // h = P(1)
    std::vector<Rational> point_counts;      // N_1..N_g

    Rational numer_at(const Rational& t) const {
        Rational r(0);
        for (auto it = numerator_coeffs.rbegin(); it != numerator_coeffs.rend(); ++it) r = r * t + *it;
        return r;
    }
    std::string label() const {
        std::string s = "g" + std::to_string(genus) + "_q" + q.pretty();
        for (const auto& n : point_counts) s += "_N" + n.pretty();
        return s;
    }
};

namespace detail_curve {

// power sums p_m of the inverse roots of P (P(t) = prod (1 - alpha_j t)),
// via Newton's identities; e_k = (-1)^k a_k.
inline std::vector<Rational> inverse_root_power_sums(const std::vector<Rational>& a, int upto) {
    int n = static_cast<int>(a.size()) - 1; // number of roots
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) e[static_cast<std::size_t>(k)] = (k % 2 == 0) ? a[static_cast<std::size_t>(k)] : -a[static_cast<std::size_t>(k)];
    std::vector<Rational> p(static_cast<std::size_t>(upto) + 1, Rational(0));
    for (int k = 1; k <= upto; ++k) {
        Rational s(0);
        for (int i = 1; i < k; ++i)
            if (i <= n) s += ((i % 2 == 1) ? Rational(1) : Rational(-1)) * e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
        if (k <= n) s += ((k % 2 == 1) ? Rational(1) : Rational(-1)) * e[static_cast<std::size_t>(k)] * Rational(k);
        p[static_cast<std::size_t>(k)] = s;
    }
    return p;
}

inline void validate(CurveData& c) {
    if (c.genus < 0) throw InvalidCounts("negative genus");
    if (c.q <= Rational(1) || !c.q.is_integer()) throw InvalidCounts("q must be an integer >= 2");
    auto& a = c.numerator_coeffs;
    if (static_cast<int>(a.size()) != 2 * c.genus + 1) throw InvalidCounts("numerator must have degree 2g");
    if (a[0] != Rational(1)) throw InvalidCounts("numerator constant term must be 1");
    for (const auto& ai : a)
        if (!ai.is_integer()) throw InvalidCounts("numerator coefficients must be integers");
    for (int i = 0; i <= 2 * c.genus; ++i) {
        Rational lhs = a[static_cast<std::size_t>(2 * c.genus - i)];
        Rational rhs = c.q.pow(c.genus - i) * a[static_cast<std::size_t>(i)];
        if (lhs != rhs) throw InvalidCounts("functional-equation symmetry a_{2g-i} = q^{g-i} a_i fails");
    }
    c.class_number = c.numer_at(Rational(1));
    if (c.class_number < Rational(1)) throw InvalidCounts("class number must be >= 1");
    // regenerate N_1..N_g
    auto p = inverse_root_power_sums(a, std::max(1, c.genus));
    std::vector<Rational> counts;
    for (int m = 1; m <= c.genus; ++m)
        counts.push_back(c.q.pow(m) + Rational(1) - p[static_cast<std::size_t>(m)]);
    if (!c.point_counts.empty() && c.point_counts != counts)
        throw InvalidCounts("point counts do not regenerate the numerator");
    c.point_counts = counts;
    // all N_m through 2g must be nonnegative integers for geometric data
    if (c.genus > 0) {
        auto pp = inverse_root_power_sums(a, 2 * c.genus);
        for (int m = 1; m <= 2 * c.genus; ++m) {
            Rational nm = c.q.pow(m) + Rational(1) - pp[static_cast<std::size_t>(m)];
            if (nm < Rational(0) || !nm.is_integer())
                throw InvalidCounts("point count N_" + std::to_string(m) + " is not a nonnegative integer");
        }
    }
}

} // namespace detail_curve

// Build P(t) by matching Z(t) = exp(sum N_m t^m / m) = P(t)/((1-t)(1-qt))
// through degree g, then complete a_{g+1}..a_{2g} by the symmetry.
inline CurveData curve_from_point_counts(const Rational& q, int genus, const std::vector<Rational>& counts) {
    if (static_cast<int>(counts.size()) != genus) throw InvalidCounts("need exactly g point counts");
    CurveData c;
    c.q = q;
    c.genus = genus;
    // z_j: coefficients of Z through degree g via j z_j = sum_{m<=j} N_m z_{j-m}
    std::vector<Rational> z(static_cast<std::size_t>(genus) + 1, Rational(0));
    z[0] = Rational(1);
    for (int j = 1; j <= genus; ++j) {
        Rational s(0);
        for (int m = 1; m <= j; ++m) s += counts[static_cast<std::size_t>(m - 1)] * z[static_cast<std::size_t>(j - m)];
        z[static_cast<std::size_t>(j)] = s / Rational(j);
    }
    std::vector<Rational> a(static_cast<std::size_t>(2 * genus) + 1, Rational(0));
    for (int j = 0; j <= genus; ++j) {
        Rational v = z[static_cast<std::size_t>(j)];
        if (j >= 1) v -= (Rational(1) + q) * z[static_cast<std::size_t>(j - 1)];
        if (j >= 2) v += q * z[static_cast<std::size_t>(j - 2)];
        a[static_cast<std::size_t>(j)] = v;
    }
    for (int j = genus + 1; j <= 2 * genus; ++j)
        a[static_cast<std::size_t>(j)] = q.pow(j - genus) * a[static_cast<std::size_t>(2 * genus - j)];
    c.numerator_coeffs = a;
    c.point_counts = counts;
    detail_curve::validate(c);
    return c;
}

inline CurveData curve_from_numerator(const Rational& q, int genus, const std::vector<Rational>& coeffs) {
    CurveData c;
    c.q = q;
    c.genus = genus;
    c.numerator_coeffs = coeffs;
    detail_curve::validate(c);
    return c;
}

// Numerator coefficient with the FE-completed upper half kept formal in q:
// for i <= g the stored integer, for i > g the monomial q^(i-g) * a_(2g-i).
// This is what makes zhat(1-s) = zhat(s) an identity in formal q.
inline RatFunc formal_numerator_coeff(const CurveData& c, int i) {
    if (i < 0 || i > 2 * c.genus) return RatFunc();
    if (i <= c.genus) return RatFunc(c.numerator_coeffs[static_cast<std::size_t>(i)]);
    return RatFunc::q_power(Rational(i - c.genus)) *
           RatFunc(c.numerator_coeffs[static_cast<std::size_t>(2 * c.genus - i)]);
}

// The monomial q^(-(form + shift)) as an exact rational function.
inline RatFunc monomial_of_form(const LinearForm& form, long long shift) {
    std::array<int, kNumSlots> e{};
    long long qexp = -(form.constant + shift) * kUnitQ;
    e[kSlotQ] = static_cast<int>(qexp);
    for (std::size_t i = 0; i < form.coeffs.size(); ++i)
        e[kSlotX0 + static_cast<int>(i)] = static_cast<int>(form.coeffs[i] * kUnitX);
    return RatFunc::laurent(Rational(1), e);
}

// zhat_F(form + shift): with M = q^(-(form+shift)),
//   M^(1-g) P(M) / ((1-M)(1-qM)).
inline RatFunc affine_zeta(const CurveData& curve, const LinearForm& form, long long shift) {
    if (form.is_constant()) {
        long long n = form.constant + shift;
        if (n == 0 || n == 1)
            throw EvalPole("zhat evaluated at its pole s = " + std::to_string(n));
    }
    RatFunc M = monomial_of_form(form, shift);
    RatFunc P;
    for (int i = 2 * curve.genus; i >= 0; --i)
        P = P * M + formal_numerator_coeff(curve, i);
    RatFunc one(Rational(1));
    RatFunc qf = RatFunc::var(VarId::q());
    return M.pow(1 - curve.genus) * P / ((one - M) * (one - qf * M));
}

// zhat in the bundle variable t = q^(-s): t^(1-g) P(t) / ((1-t)(1-qt)),
// with q formal.
inline RatFunc zeta_hat_t(const CurveData& curve) {
    RatFunc t = RatFunc::var(VarId::t());
    RatFunc P;
    for (int i = 2 * curve.genus; i >= 0; --i)
        P = P * t + formal_numerator_coeff(curve, i);
    RatFunc one(Rational(1));
    RatFunc qf = RatFunc::var(VarId::q());
    return t.pow(1 - curve.genus) * P / ((one - t) * (one - qf * t));
}

// Z(t) = P(t)/((1-t)(1-qt)) with the curve's numeric q plugged in.
inline RatFunc classical_zeta_numeric(const CurveData& curve) {
    RatFunc t = RatFunc::var(VarId::t());
    RatFunc P;
    for (int i = static_cast<int>(curve.numerator_coeffs.size()) - 1; i >= 0; --i)
        P = P * t + RatFunc(curve.numerator_coeffs[static_cast<std::size_t>(i)]);
    RatFunc one(Rational(1));
    return P / ((one - t) * (one - RatFunc(curve.q) * t));
}

// zeta_X(i) = P(q^-i) / ((1-q^-i)(1-q^(1-i))) as an exact rational, i >= 2.
inline Rational curve_zeta_value(const CurveData& curve, int i) {
    if (i < 2) throw ContractViolation("curve_zeta_value needs i >= 2");
    Rational m = curve.q.pow(-i);
    return curve.numer_at(m) / ((Rational(1) - m) * (Rational(1) - curve.q.pow(1 - i)));
}

// number of effective divisors of degree d (coefficient of t^d in Z).
inline Rational effective_divisor_count(const CurveData& curve, int d) {
    if (d < 0) return Rational(0);
    std::vector<Rational> z(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int m = 0; m <= d; ++m) {
        Rational v = (m < static_cast<int>(curve.numerator_coeffs.size()))
                         ? curve.numerator_coeffs[static_cast<std::size_t>(m)]
                         : Rational(0);
        if (m >= 1) v += (Rational(1) + curve.q) * z[static_cast<std::size_t>(m - 1)];
        if (m >= 2) v -= curve.q * z[static_cast<std::size_t>(m - 2)];
        z[static_cast<std::size_t>(m)] = v;
    }
    return z[static_cast<std::size_t>(d)];
}

// #Pic^0(F_{q^k}) = prod_j (1 - alpha_j^k).
inline Rational extension_class_number(const CurveData& curve, int k) {
    if (curve.genus == 0) return Rational(1);
    int n = 2 * curve.genus;
    auto p = detail_curve::inverse_root_power_sums(curve.numerator_coeffs, n * k);
    // Newton in reverse: elementary symmetrics of beta_j = alpha_j^k
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1, Rational(0));
    e[0] = Rational(1);
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (int j = 1; j <= i; ++j) {
            Rational term = p[static_cast<std::size_t>(j * k)] * e[static_cast<std::size_t>(i - j)];
            s += (j % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(i)] = s / Rational(i);
    }
    Rational h(0);
    for (int i = 0; i <= n; ++i)
        h += ((i % 2 == 0) ? Rational(1) : Rational(-1)) * e[static_cast<std::size_t>(i)];
    return h;
}

// point count over F_{q^m} for any m >= 1
inline Rational point_count(const CurveData& curve, int m) {
    auto p = detail_curve::inverse_root_power_sums(curve.numerator_coeffs, std::max(m, 1));
    return curve.q.pow(m) + Rational(1) - (curve.genus > 0 ? p[static_cast<std::size_t>(m)] : Rational(0));
}

} // namespace zetaforge
