#pragma once

// The period of a group over a function field: a sum over the Weyl group of
// products of geometric factors 1/(1 - q^-<w.lambda-rho, a^>) over simple a
// and completed-zeta quotients zhat(<lambda,a^>)/zhat(<lambda,a^>+1) over the
// inversion set. Terms keep a factored atomic view (which iterated residues
// preserve as far as possible) next to the exact expanded view.

#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curve.hpp"
#include "eval.hpp"
#include "root_system.hpp"

namespace zetaforge {

struct Atom {
    enum class Kind { Geom, Zeta } kind = Kind::Geom;
    LinearForm form;
    long long shift = 0; // Zeta only: argument is form + shift
    int exponent = -1;   // nonzero

    // the zeta-argument signature key (form folded with shift)
    LinearForm argument() const { return kind == Kind::Zeta ? form.plus(shift) : form; }
    std::string to_string() const {
        std::string base = (kind == Kind::Geom) ? "(1-q^-(" + form.to_string() + "))"
                                                : "Z(" + form.plus(shift).to_string() + ")";
        if (exponent != 1) base += "^" + std::to_string(exponent);
        return base;
    }
};

struct PeriodTerm {
    std::vector<int> weyl_word;
    RatFunc prefactor{Rational(1)};
    std::vector<Atom> atoms;

    int zeta_pair_count() const {
        int plus = 0;
        for (const auto& a : atoms)
            if (a.kind == Atom::Kind::Zeta && a.exponent > 0) plus += a.exponent;
        return plus;
    }
    // merge atoms with identical (kind, form, shift); drop zero exponents
    void canonicalize_atoms() {
        std::vector<Atom> merged;
        for (const auto& a : atoms) {
            bool found = false;
            for (auto& m : merged)
                if (m.kind == a.kind && m.form == a.form && m.shift == a.shift) {
                    m.exponent += a.exponent;
                    found = true;
                    break;
                }
            if (!found) merged.push_back(a);
        }
        atoms.clear();
        for (auto& m : merged)
            if (m.exponent != 0) atoms.push_back(m);
    }
};

struct PeriodExpression {
    RootDatum datum;
    CurveData curve;
    std::vector<PeriodTerm> terms;
    std::vector<int> live_vars; // X indices still present
    // every zeta-argument (form, shift) the construction has touched,
    // including specializations; feeds the clearing candidate pool
    std::vector<std::pair<LinearForm, long long>> zeta_signatures;

    void track(const LinearForm& form, long long shift) { zeta_signatures.emplace_back(form, shift); }
};

inline RatFunc atom_to_ratfunc(const Atom& a, const CurveData& curve) {
    if (a.kind == Atom::Kind::Geom) {
        RatFunc base = RatFunc(Rational(1)) - monomial_of_form(a.form, 0);
        return base.pow(a.exponent);
    }
    return affine_zeta(curve, a.form, a.shift).pow(a.exponent);
}

inline PeriodExpression build_period(const RootDatum& datum, const CurveData& curve) {
    PeriodExpression e;
    e.datum = datum;
    e.curve = curve;
    for (int i = 0; i < datum.rank; ++i) e.live_vars.push_back(i);
    auto ws = weyl_enumerate(datum);
    for (const auto& w : ws) {
        PeriodTerm t;
        t.weyl_word = w.word;
        for (int i = 0; i < datum.rank; ++i) {
            Atom g;
            g.kind = Atom::Kind::Geom;
            g.form = pairing_form(datum, w, datum.positive_coroots[static_cast<std::size_t>(i)], true);
            g.exponent = -1;
            t.atoms.push_back(g);
        }
        for (int p : inversion_set(datum, w)) {
            LinearForm f = pairing_form_identity(datum, datum.positive_coroots[static_cast<std::size_t>(p)], false);
            Atom zn{Atom::Kind::Zeta, f, 0, +1};
            Atom zd{Atom::Kind::Zeta, f, 1, -1};
            t.atoms.push_back(zn);
            t.atoms.push_back(zd);
            e.track(f, 0);
            e.track(f, 1);
        }
        e.terms.push_back(std::move(t));
    }
    return e;
}

inline RatFunc expand_term(const PeriodTerm& t, const CurveData& curve) {
    RatFunc v = t.prefactor;
    for (const auto& a : t.atoms) v *= atom_to_ratfunc(a, curve);
    return v;
}

inline RatFunc expand(const PeriodExpression& e) {
    RatFunc total;
    for (const auto& t : e.terms) total += expand_term(t, e.curve);
    return total;
}

// Evaluate atoms directly at a complex lambda without any expansion; the
// independent numeric oracle for expand().
inline Complex numeric_period(const PeriodExpression& e, const std::vector<Complex>& lambda, double q_value) {
    if (static_cast<int>(lambda.size()) != e.datum.rank)
        throw ContractViolation("lambda size does not match rank");
    double lq = std::log(q_value);
    auto qpow = [&](Complex z) { return std::exp(-lq * z); }; // q^{-z}
    auto form_at = [&](const LinearForm& f) {
        Complex v = static_cast<double>(f.constant);
        for (std::size_t i = 0; i < f.coeffs.size(); ++i)
            v += static_cast<double>(f.coeffs[i]) * lambda[i];
        return v;
    };
    int g = e.curve.genus;
    auto zeta_at = [&](Complex z) {
        Complex M = qpow(z);
        Complex P = 0.0;
        for (int i = 2 * g; i >= 0; --i) {
            double c = (i <= g) ? e.curve.numerator_coeffs[static_cast<std::size_t>(i)].to_double()
                                : e.curve.numerator_coeffs[static_cast<std::size_t>(2 * g - i)].to_double() *
                                      std::pow(q_value, i - g);
            P = P * M + c;
        }
        Complex Mg = std::pow(M, 1 - g);
        return Mg * P / ((1.0 - M) * (1.0 - q_value * M));
    };

    ComplexAssignment asg;
    asg.set_q(q_value);
    for (int i = 0; i < e.datum.rank; ++i) asg.set_x(i, qpow(lambda[static_cast<std::size_t>(i)]));

    Complex total = 0.0;
    for (const auto& t : e.terms) {
        Complex v = eval_complex(t.prefactor, asg);
        for (const auto& a : t.atoms) {
            Complex base;
            if (a.kind == Atom::Kind::Geom) base = 1.0 - qpow(form_at(a.form));
            else base = zeta_at(form_at(a.form) + static_cast<double>(a.shift));
            Complex val = std::pow(base, a.exponent);
            if (std::abs(val) > 1e12) throw NearPole("atom magnitude exceeds 1e12");
            v *= val;
        }
        total += v;
    }
    return total;
}

inline std::string dump(const PeriodExpression& e) {
    std::ostringstream os;
    for (const auto& t : e.terms) {
        os << "w=[";
        for (std::size_t i = 0; i < t.weyl_word.size(); ++i) os << (i ? "," : "") << t.weyl_word[i];
        os << "]";
        if (!(t.prefactor == RatFunc(Rational(1)))) os << " pref=" << t.prefactor.to_string();
        for (const auto& a : t.atoms) os << " " << a.to_string();
        os << "\n";
    }
    return os.str();
}

} // namespace zetaforge
