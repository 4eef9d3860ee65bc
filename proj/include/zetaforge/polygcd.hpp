#pragma once

// Multivariate polynomial gcd via recursive content/primitive-part reduction
// and a primitive pseudo-remainder sequence in the highest used slot.
// Sizes stay small at the ranks this project supports, so the classical
// primitive PRS is preferred over anything asymptotically clever.

#include <optional>
#include <vector>

#include "multipoly.hpp"

namespace zetaforge {

// Exact division a / b; nullopt when b does not divide a.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return MultiPoly();
    MultiPoly r = a, q;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lb.divides(lr)) return std::nullopt;
        MultiPoly t(r.leading_coeff() / cb, lr.divide(lb));
        q += t;
        r -= t * b;
    }
    return q;
}

inline bool divides(const MultiPoly& b, const MultiPoly& a) {
    return divide_exact(a, b).has_value();
}

namespace detail {

inline int deg_in(const MultiPoly& f, int slot) { return f.degree_in_slot(slot); }

// Coefficient of v^d with f viewed univariate in `slot`.
inline MultiPoly slot_coeff(const MultiPoly& f, int slot, int d) {
    MultiPoly out;
    for (const auto& t : f.terms()) {
        if (t.m.e[slot] != d) continue;
        Monomial m = t.m;
        m.e[slot] = 0;
        out += MultiPoly(t.c, m);
    }
    return out;
}

// Pseudo-remainder of f by g in `slot` (up to a content factor, which the
// primitive PRS strips anyway).
inline MultiPoly prem(MultiPoly f, const MultiPoly& g, int slot) {
    int n = deg_in(g, slot);
    MultiPoly lg = slot_coeff(g, slot, n);
    while (!f.is_zero()) {
        int m = deg_in(f, slot);
        if (m < n) break;
        MultiPoly lf = slot_coeff(f, slot, m);
        Monomial shift;
        shift.e[slot] = m - n;
        f = f * lg - (g * lf).mul_monomial(shift);
    }
    return f;
}

} // namespace detail

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

namespace detail {

// gcd of the univariate-view coefficients (lives in lower slots).
inline MultiPoly content_in_slot(const MultiPoly& f, int slot) {
    MultiPoly c;
    for (const auto& cd : f.coeffs_in_slot(slot)) {
        if (cd.is_zero()) continue;
        c = c.is_zero() ? cd : poly_gcd(c, cd);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? MultiPoly::one() : c;
}

inline MultiPoly primitive_in_slot(const MultiPoly& f, int slot) {
    if (f.is_zero()) return f;
    MultiPoly c = content_in_slot(f, slot);
    auto q = divide_exact(f, c);
    if (!q) throw ContractViolation("content does not divide its polynomial");
    return q->rat_primitive();
}

} // namespace detail

// Integer-primitive gcd with positive leading coefficient; gcd of anything
// with a nonzero constant is 1.
inline MultiPoly poly_gcd(const MultiPoly& f_in, const MultiPoly& g_in) {
    if (f_in.is_zero()) return g_in.is_zero() ? MultiPoly() : g_in.rat_primitive();
    if (g_in.is_zero()) return f_in.rat_primitive();
    if (f_in.is_constant() || g_in.is_constant()) return MultiPoly::one();

    // strip monomial contents first; they are the cheap common part
    Monomial mf = f_in.monomial_content();
    Monomial mg = g_in.monomial_content();
    Monomial common;
    for (int i = 0; i < kNumSlots; ++i) common.e[i] = std::min(mf.e[i], mg.e[i]);
    MultiPoly f = f_in.divide_monomial(mf);
    MultiPoly g = g_in.divide_monomial(mg);
    MultiPoly unit(Rational(1), common);

    if (f.num_terms() == 1 || g.num_terms() == 1) return unit; // leftover gcd is a unit
    if (f.is_constant() || g.is_constant()) return unit;

    int slot = std::max(f.highest_used_slot(), g.highest_used_slot());
    MultiPoly cf = detail::content_in_slot(f, slot);
    MultiPoly cg = detail::content_in_slot(g, slot);
    MultiPoly c = poly_gcd(cf, cg);

    auto fq = divide_exact(f, cf);
    auto gq = divide_exact(g, cg);
    if (!fq || !gq) throw ContractViolation("content division failed in gcd");
    MultiPoly a = fq->rat_primitive();
    MultiPoly b = gq->rat_primitive();
    if (detail::deg_in(a, slot) < detail::deg_in(b, slot)) std::swap(a, b);

    while (!b.is_zero()) {
        MultiPoly r = detail::prem(a, b, slot);
        a = b;
        b = r.is_zero() ? MultiPoly() : detail::primitive_in_slot(r, slot);
    }
    MultiPoly result = detail::primitive_in_slot(a, slot) * c * unit;
    return result.rat_primitive();
}

} // namespace zetaforge
