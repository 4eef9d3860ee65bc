#pragma once

// Floating (complex) evaluation of polynomials and rational functions.
// Generator values are derived from nominal assignments with principal
// fractional powers; q is expected real > 1 in every numeric path here.

#include <cmath>
#include <complex>
#include <optional>

#include "ratfunc.hpp"

namespace zetaforge {

using Complex = std::complex<double>;

class ComplexAssignment {
public:
    // Nominal values; L defaults to ln(q) when unset.
    ComplexAssignment& set(VarId v, Complex value) {
        nominal_[v.slot()] = value;
        return *this;
    }
    ComplexAssignment& set_q(Complex q) { return set(VarId::q(), q); }
    ComplexAssignment& set_x(int i, Complex v) { return set(VarId::x(i), v); }
    ComplexAssignment& set_t(Complex v) { return set(VarId::t(), v); }

    // Value of the stored generator of a slot.
    Complex generator(int slot) const {
        std::optional<Complex> nv = nominal_[slot];
        if (slot == kSlotL && !nv) {
            if (!nominal_[kSlotQ]) throw EvalPole("L unassigned and q missing");
            return std::log(*nominal_[kSlotQ]);
        }
        if (!nv) throw EvalPole("unassigned variable " + slot_name(slot));
        double inv_unit = 1.0 / slot_unit(slot);
        if (slot_unit(slot) == 1) return *nv;
        return std::pow(*nv, inv_unit); // principal branch
    }
    bool has(int slot) const { return nominal_[slot].has_value() || slot == kSlotL; }

private:
    std::array<std::optional<Complex>, kNumSlots> nominal_{};
};

namespace detail {
inline Complex cpow_int(Complex base, int32_t e) {
    if (e == 0) return {1.0, 0.0};
    Complex r{1.0, 0.0};
    Complex b = base;
    int32_t k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}
} // namespace detail

inline Complex eval_complex(const MultiPoly& p, const ComplexAssignment& a) {
    Complex sum{0.0, 0.0};
    std::array<Complex, kNumSlots> gen{};
    std::array<bool, kNumSlots> got{};
    for (const auto& t : p.terms()) {
        Complex term = t.c.to_complex();
        for (int i = 0; i < kNumSlots; ++i) {
            if (t.m.e[i] == 0) continue;
            if (!got[i]) {
                gen[i] = a.generator(i);
                got[i] = true;
            }
            term *= detail::cpow_int(gen[i], t.m.e[i]);
        }
        sum += term;
    }
    return sum;
}

inline Complex eval_complex(const RatFunc& f, const ComplexAssignment& a) {
    Complex d = eval_complex(f.den(), a);
    if (std::abs(d) < 1e-300) throw EvalPole("denominator ~ 0 in eval_complex");
    return eval_complex(f.num(), a) / d;
}

} // namespace zetaforge
