#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zetaforge/ratfunc.hpp"
#include "zetaforge/eval.hpp"

using namespace zetaforge;

namespace {

RatFunc Q() { return RatFunc::var(VarId::q()); }
RatFunc X(int i = 0) { return RatFunc::var(VarId::x(i)); }
RatFunc T() { return RatFunc::var(VarId::t()); }
RatFunc C(long long n, long long d = 1) { return RatFunc(Rational(n, d)); }

// small random rational functions in x0 and q
RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
    auto rand_poly = [&] {
        MultiPoly p;
        for (int t = 0; t < 3; ++t) {
            Monomial m;
            m.e[kSlotX0] = ex(rng) * kUnitX;
            m.e[kSlotQ] = ex(rng) * kUnitQ;
            p += MultiPoly(Rational(coef(rng)), m);
        }
        return p;
    };
    MultiPoly den;
    do { den = rand_poly(); } while (den.is_zero());
    return RatFunc(rand_poly(), den);
}

} // namespace

TEST_CASE("arith identities") {
    RatFunc f = (C(1) - Q() * X()) / (C(1) - Q() * X());
    CHECK(f == C(1));
    CHECK((C(1) / (C(1) - T()) + (-(C(1) / (C(1) - T())))).is_zero());
    RatFunc g = C(1) / ((C(1) - T()) * (C(1) - Q() * T()));
    CHECK(g * (C(1) - T()) == C(1) / (C(1) - Q() * T()));
    CHECK_THROWS_AS(C(1) / RatFunc(), DivisionByZero);
}

TEST_CASE("reduction is idempotent and canonical") {
    RatFunc f = (C(2) * X() + C(2)) / (C(4) * Q());
    // rebuild from its own parts: bitwise identical
    RatFunc g(f.num(), f.den());
    CHECK(f == g);
    CHECK(f.num().to_string() == g.num().to_string());
    // denominator leading coefficient positive, contents coprime
    CHECK(f.den().leading_coeff() > Rational(0));
}

TEST_CASE("field laws on random instances") {
    std::mt19937 rng(20260201);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("substitute") {
    RatFunc f = C(1) / (C(1) - Q() * X());
    CHECK_THROWS_AS(f.substitute(VarId::x(0), C(1) / Q()), DenominatorVanishes);

    RatFunc x2 = X() * X();
    RatFunc inv = x2.substitute(VarId::x(0), C(1) / (Q() * X()));
    CHECK(inv == C(1) / (Q() * Q() * X() * X()));

    // completed genus-zero zeta is a fixed point of t -> 1/(qt)
    RatFunc zhat = T() / ((C(1) - T()) * (C(1) - Q() * T()));
    CHECK(zhat.substitute(VarId::t(), C(1) / (Q() * T())) == zhat);
}

TEST_CASE("pole_order") {
    RatFunc g1 = C(1) / ((C(1) - Q() * X()) * (C(1) - Q() * X()));
    CHECK(g1.pole_order(VarId::x(0), C(1) / Q()) == 2);
    RatFunc g2 = C(1) / (C(1) - Q() * X());
    CHECK(g2.pole_order(VarId::x(0), C(1) / (Q() * Q())) == 0);
    // removable singularity disappears on reduction
    RatFunc g3 = (C(1) - Q() * X()) / ((C(1) - Q() * X()) * (C(1) - X()));
    CHECK(g3.pole_order(VarId::x(0), C(1) / Q()) == 0);
}

TEST_CASE("residue at simple and higher poles") {
    // simple pole with a symbolic location (x1 plays the constant a)
    RatFunc f = C(1) / (X(0) - X(1));
    CHECK(f.residue(VarId::x(0), X(1)) == C(1));

    RatFunc g = C(1) / ((C(1) - Q() * X()) * (C(1) - X()));
    CHECK(g.residue(VarId::x(0), C(1) / Q()) == C(-1) / (Q() - C(1)));

    CHECK((C(1) / (C(1) - X())).residue(VarId::x(0), C(1) / Q()).is_zero());

    // double pole, via the derivative branch
    RatFunc h = C(1) / ((X() - C(2)) * (X() - C(2)) * X());
    // d/dx [1/x] at 2 = -1/4
    CHECK(h.residue(VarId::x(0), C(2)) == C(-1, 4));
}

TEST_CASE("residue linearity and series oracle") {
    std::mt19937 rng(987654);
    RatFunc point = C(1) / Q();
    VarId v = VarId::x(0);
    for (int i = 0; i < 50; ++i) {
        RatFunc f = random_ratfunc(rng);
        RatFunc g = random_ratfunc(rng);
        int k = std::max(f.pole_order(v, point), g.pole_order(v, point));
        // linearity with v-free scalars
        RatFunc alpha = C(3, 2) * Q(), beta = C(-2) / (Q() + C(1));
        RatFunc lhs = (alpha * f + beta * g).residue(v, point);
        CHECK(lhs == alpha * f.residue(v, point) + beta * g.residue(v, point));
        // truncated-Laurent oracle: coefficient of (x - 1/q)^(-1)
        auto lf = f.laurent_coeffs(v, point, -(k + 2), k + 2 - 1 + 1);
        // entry for exponent -1 sits at index (k + 2) - 1
        CHECK(f.residue(v, point) == lf[static_cast<std::size_t>(k + 1)]);
    }
}

TEST_CASE("laurent series matches by recomposition") {
    // f = 1/((1-qx)(1-x)): expand around x=1/q to order 1 and recompose
    RatFunc f = C(1) / ((C(1) - Q() * X()) * (C(1) - X()));
    VarId v = VarId::x(0);
    RatFunc p = C(1) / Q();
    auto cs = f.laurent_coeffs(v, p, -1, 3);
    RatFunc y = X() - p;
    RatFunc approx = cs[0] / y + cs[1] + cs[2] * y;
    // the tail (f - approx) must vanish at x=1/q to order >= 2
    RatFunc tail = f - approx;
    CHECK(tail.pole_order(v, p) == 0);
    RatFunc at = tail.substitute(v, p);
    CHECK(at.is_zero());
}

TEST_CASE("eval_complex") {
    ComplexAssignment a;
    a.set_q(2.0).set_t(0.0);
    CHECK(std::abs(eval_complex(C(1) / (C(1) - Q() * T()), a) - 1.0) < 1e-14);

    ComplexAssignment b;
    b.set_q(2.0).set_t(0.25);
    auto val = eval_complex(C(1) / ((C(1) - T()) * (C(1) - Q() * T())), b);
    CHECK(std::abs(val - 8.0 / 3.0) < 1e-12);

    ComplexAssignment c;
    c.set_q(2.0).set_t(1.0);
    CHECK_THROWS_AS(eval_complex(C(1) / (C(1) - T()), c), EvalPole);
}

TEST_CASE("eval of substitution composes") {
    std::mt19937 rng(777);
    for (int i = 0; i < 20; ++i) {
        RatFunc f = random_ratfunc(rng);
        RatFunc g = random_ratfunc(rng);
        ComplexAssignment base;
        base.set_q(2.0).set_x(0, Complex(0.37, 0.21));
        Complex gval;
        try {
            gval = eval_complex(g, base);
        } catch (const EvalPole&) { continue; }
        ComplexAssignment inner;
        inner.set_q(2.0).set_x(0, gval);
        try {
            RatFunc comp = f.substitute(VarId::x(0), g);
            Complex lhs = eval_complex(comp, base);
            Complex rhs = eval_complex(f, inner);
            double scale = std::max(1.0, std::abs(rhs));
            CHECK(std::abs(lhs - rhs) / scale < 1e-10);
        } catch (const DenominatorVanishes&) {
            continue;
        } catch (const EvalPole&) { continue; }
    }
}

TEST_CASE("generator-level monomial substitutions") {
    // x -> q^{-1}/x on an even function (functional-equation workhorse);
    // x = xi^2 lifts it to xi -> q^{-1/2}/xi, i.e. gen^k -> (q^{-1/2})^k gen^{-k}
    RatFunc f = X() + C(1) / (Q() * X());
    std::array<int, kNumSlots> e2{};
    e2[kSlotQ] = -2; // quarter-units: q^{-1/2}
    e2[kSlotX0] = -1;
    RatFunc g = f.subst_slot_laurent(kSlotX0, 1, Rational(1), e2);
    CHECK(g == f); // c = 1 fixes f(x) = x + 1/(qx)
}
