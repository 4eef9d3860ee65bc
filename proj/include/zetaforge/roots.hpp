#pragma once

// Complex root location for univariate rational-coefficient polynomials,
// with a-posteriori certified radii, plus the exact on-circle test used by
// the Riemann-hypothesis verdicts: self-inversive detection and a Sturm
// count after the standard w + 1/w reduction. Exact path first; the numeric
// path is the fallback and also supplies the reported root list.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "rational.hpp"
#include "common.hpp"

namespace zetaforge {

struct RootEstimate {
    std::complex<double> value;
    double radius = 0.0; // certified error radius
    int multiplicity = 1;
};

// --- exact univariate helpers (dense ascending coefficient vectors) --------

namespace upoly {

inline void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline int degree(const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const std::vector<Rational>& p, const Rational& x) {
    Rational r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

inline std::vector<Rational> derivative(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long long>(i)));
    trim(d);
    return d;
}

// Scale to integer-primitive with positive leading coefficient (positive
// scaling keeps all Sturm signs intact).
inline void make_primitive(std::vector<Rational>& p) {
    trim(p);
    if (p.empty()) return;
    Rational g(0);
    for (const auto& c : p) g = gcd(g, c);
    for (auto& c : p) c = c / g;
}

inline std::vector<Rational> rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    trim(a);
    while (degree(a) >= degree(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(shift) + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline std::vector<Rational> gcd_poly(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a); trim(b);
    while (!b.empty()) {
        auto r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
        make_primitive(b);
    }
    make_primitive(a);
    return a;
}

inline std::vector<Rational> divide_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (degree(a) >= degree(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        int shift = degree(a) - degree(b);
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(shift) + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty()) throw ContractViolation("inexact polynomial division");
    trim(q);
    return q;
}

inline std::vector<std::vector<Rational>> sturm_chain(std::vector<Rational> p) {
    std::vector<std::vector<Rational>> chain;
    make_primitive(p);
    if (p.empty()) return chain;
    chain.push_back(p);
    auto d = derivative(p);
    make_primitive(d);
    if (d.empty()) return chain;
    chain.push_back(d);
    while (true) {
        auto r = rem(chain[chain.size() - 2], chain.back());
        make_primitive(r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
    return chain;
}

inline int sign_variations(const std::vector<std::vector<Rational>>& chain, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        int s = eval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Distinct real roots in (a, b].
inline int count_roots_in(const std::vector<Rational>& p, const Rational& a, const Rational& b) {
    auto chain = sturm_chain(p);
    if (chain.empty()) throw DegenerateInput("Sturm chain of zero polynomial");
    return sign_variations(chain, a) - sign_variations(chain, b);
}

} // namespace upoly

// --- numeric roots ----------------------------------------------------------

// All complex roots of p (ascending rational coefficients), Durand-Kerner with
// Newton polish; residual-based certified radii; multiplicities by clustering.
inline std::vector<RootEstimate> univariate_roots(std::vector<Rational> coeffs) {
    upoly::trim(coeffs);
    if (coeffs.empty()) throw DegenerateInput("zero polynomial has no well-defined roots");
    if (upoly::degree(coeffs) == 0) throw DegenerateInput("constant polynomial");

    std::vector<RootEstimate> out;
    // exact roots at the origin
    std::size_t zeros = 0;
    while (zeros < coeffs.size() && coeffs[zeros].is_zero()) ++zeros;
    if (zeros > 0) {
        out.push_back({{0.0, 0.0}, 0.0, static_cast<int>(zeros)});
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros));
    }
    int n = upoly::degree(coeffs);
    if (n == 0) return out;

    std::vector<std::complex<double>> a(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = coeffs[i].to_double();

    auto peval = [&](const std::vector<std::complex<double>>& p, std::complex<double> z) {
        std::complex<double> r = 0.0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
        return r;
    };
    std::vector<std::complex<double>> dp(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) dp[i - 1] = a[i] * static_cast<double>(i);

    // Cauchy-style radius bound for initial guesses
    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(i)] / a.back()));
    bound += 1.0;
    std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.3966; // fixed offset avoids symmetry traps
        w[static_cast<std::size_t>(k)] = std::polar(0.7 * bound + 0.2, ang);
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom = a.back();
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= (w[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(j)]);
            if (std::abs(denom) < 1e-300) continue;
            std::complex<double> delta = peval(a, w[static_cast<std::size_t>(k)]) / denom;
            w[static_cast<std::size_t>(k)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-15 * (1.0 + bound)) break;
    }
    for (int k = 0; k < n; ++k) { // Newton polish where the derivative allows
        for (int it = 0; it < 6; ++it) {
            auto d = peval(dp, w[static_cast<std::size_t>(k)]);
            if (std::abs(d) < 1e-12) break;
            w[static_cast<std::size_t>(k)] -= peval(a, w[static_cast<std::size_t>(k)]) / d;
        }
    }

    // cluster
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    double ctol = 1e-7 * (1.0 + bound);
    for (int k = 0; k < n; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        std::vector<int> members{k};
        used[static_cast<std::size_t>(k)] = true;
        for (int j = k + 1; j < n; ++j)
            if (!used[static_cast<std::size_t>(j)] &&
                std::abs(w[static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(k)]) < ctol) {
                members.push_back(j);
                used[static_cast<std::size_t>(j)] = true;
            }
        std::complex<double> c = 0.0;
        for (int m : members) c += w[static_cast<std::size_t>(m)];
        c /= static_cast<double>(members.size());
        double diam = 0.0;
        for (int m : members) diam = std::max(diam, std::abs(w[static_cast<std::size_t>(m)] - c));
        int mult = static_cast<int>(members.size());
        // residual bound: |p(c)| / |p^(mult)(c)/mult!| ^ (1/mult), inflated by n
        std::vector<std::complex<double>> dk = a;
        double fact = 1.0;
        for (int i = 0; i < mult; ++i) {
            std::vector<std::complex<double>> nd(dk.size() > 1 ? dk.size() - 1 : 0);
            for (std::size_t t = 1; t < dk.size(); ++t) nd[t - 1] = dk[t] * static_cast<double>(t);
            dk = std::move(nd);
            fact *= (i + 1);
        }
        double denom = dk.empty() ? 0.0 : std::abs(peval(dk, c)) / fact;
        double resid = denom > 1e-300 ? std::pow(std::abs(peval(a, c)) / denom, 1.0 / mult) : 1e-6;
        out.push_back({c, n * resid + 2.0 * diam + 1e-14, mult});
    }
    std::sort(out.begin(), out.end(), [](const RootEstimate& x, const RootEstimate& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

// --- the circle test --------------------------------------------------------

struct CircleTestResult {
    bool pass = false;
    bool exact = false; // verdict came from the self-inversive + Sturm path
    std::optional<std::complex<double>> witness;
    std::vector<RootEstimate> roots;
};

namespace detail_circle {

// p(t) = E(t^2) + t*O(t^2) -> polynomial with roots {t_j^2}: E(v)^2 - v*O(v)^2.
inline std::vector<Rational> root_square_poly(const std::vector<Rational>& p) {
    std::vector<Rational> E, O;
    for (std::size_t i = 0; i < p.size(); ++i)
        (i % 2 == 0 ? E : O).push_back(p[i]);
    auto sq = [](const std::vector<Rational>& u) {
        std::vector<Rational> r(u.size() * 2 - 1, Rational(0));
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j) r[i + j] += u[i] * u[j];
        return r;
    };
    std::vector<Rational> r = sq(E);
    if (!O.empty()) {
        auto o2 = sq(O);
        r.resize(std::max(r.size(), o2.size() + 1), Rational(0));
        for (std::size_t i = 0; i < o2.size(); ++i) r[i + 1] -= o2[i];
    }
    upoly::trim(r);
    return r;
}

// exact deflation of roots at w = root (must divide exactly)
inline int deflate_root(std::vector<Rational>& s, const Rational& root) {
    int count = 0;
    std::vector<Rational> lin{-root, Rational(1)};
    while (!s.empty() && upoly::eval(s, root).is_zero()) {
        s = upoly::divide_exact(s, lin);
        ++count;
    }
    return count;
}

} // namespace detail_circle

// pass iff every root r of p has | |r|^2 - radius2 | within tolerance; the
// exact fast path detects self-inversive-on-the-circle polynomials and
// certifies with a Sturm count.
inline CircleTestResult circle_test(const std::vector<Rational>& p_in, const Rational& radius2) {
    if (radius2 <= Rational(0)) throw DegenerateInput("circle_test requires radius^2 > 0");
    std::vector<Rational> p = p_in;
    upoly::trim(p);
    if (p.empty() || upoly::degree(p) == 0) throw DegenerateInput("constant polynomial");

    CircleTestResult res;
    res.roots = univariate_roots(p);

    if (p[0].is_zero()) { // exact root at t = 0, certainly off the circle
        res.pass = false;
        res.exact = true;
        res.witness = std::complex<double>(0.0, 0.0);
        return res;
    }

    // Exact path on the squared-root polynomial, rescaled to the unit circle.
    {
        std::vector<Rational> r = detail_circle::root_square_poly(p);
        std::vector<Rational> s(r.size());
        Rational pw(1);
        for (std::size_t k = 0; k < r.size(); ++k) {
            s[k] = r[k] * pw; // s(w) = r(radius2 * w)
            pw = pw * radius2;
        }
        upoly::make_primitive(s);
        int on_circle_pm1 = detail_circle::deflate_root(s, Rational(1)) + detail_circle::deflate_root(s, Rational(-1));
        (void)on_circle_pm1; // w = +-1 correspond to |t| = radius already
        bool selfinv = true;
        int m = upoly::degree(s);
        if (m >= 0 && !s.empty()) {
            for (int k = 0; k <= m; ++k)
                if (s[static_cast<std::size_t>(k)] != s[static_cast<std::size_t>(m - k)]) { selfinv = false; break; }
        }
        if (!s.empty() && selfinv && m % 2 == 0) {
            int mu = m / 2;
            // h(z) with z = w + 1/w via G_k(z) = w^k + w^-k
            std::vector<std::vector<Rational>> G(static_cast<std::size_t>(mu) + 1);
            G[0] = {Rational(2)};
            if (mu >= 1) G[1] = {Rational(0), Rational(1)};
            for (int k = 2; k <= mu; ++k) {
                std::vector<Rational> t(G[static_cast<std::size_t>(k - 1)].size() + 1, Rational(0));
                for (std::size_t i = 0; i < G[static_cast<std::size_t>(k - 1)].size(); ++i)
                    t[i + 1] += G[static_cast<std::size_t>(k - 1)][i];
                for (std::size_t i = 0; i < G[static_cast<std::size_t>(k - 2)].size(); ++i)
                    t[i] -= G[static_cast<std::size_t>(k - 2)][i];
                G[static_cast<std::size_t>(k)] = std::move(t);
            }
            std::vector<Rational> h{s[static_cast<std::size_t>(mu)]};
            for (int k = 1; k <= mu; ++k) {
                const auto& g = G[static_cast<std::size_t>(k)];
                h.resize(std::max(h.size(), g.size()), Rational(0));
                for (std::size_t i = 0; i < g.size(); ++i)
                    h[i] += s[static_cast<std::size_t>(mu + k)] * g[i];
            }
            upoly::trim(h);
            bool all_on = true;
            if (!h.empty() && upoly::degree(h) >= 1) {
                auto g = upoly::gcd_poly(h, upoly::derivative(h));
                std::vector<Rational> hsf = (upoly::degree(g) >= 1) ? upoly::divide_exact(h, g) : h;
                upoly::make_primitive(hsf);
                int cnt = upoly::count_roots_in(hsf, Rational(-2), Rational(2));
                all_on = (cnt == upoly::degree(hsf));
            }
            if (all_on) {
                res.pass = true;
                res.exact = true;
                return res;
            }
            // self-inversive but Sturm refutes: exact failure
            res.pass = false;
            res.exact = true;
        }
    }

    // numeric verdict (also selects a witness for failures)
    bool pass = true;
    double rho2 = radius2.to_double();
    for (const auto& r : res.roots) {
        double a = std::abs(r.value);
        double err = std::abs(a * a - rho2);
        double bound = r.radius * (2.0 * a + r.radius);
        if (err > std::max(1e-9, bound)) {
            pass = false;
            res.witness = r.value;
            break;
        }
    }
    if (!res.exact) res.pass = pass;
    else if (!res.pass && !res.witness) {
        for (const auto& r : res.roots) {
            double a = std::abs(r.value);
            if (std::abs(a * a - rho2) > 1e-9) { res.witness = r.value; break; }
        }
    }
    return res;
}

} // namespace zetaforge
