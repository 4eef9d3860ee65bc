#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "zetaforge/root_system.hpp"

using namespace zetaforge;

namespace {

// Independent closure oracle on the *root* side: s_i(alpha_j) = alpha_j -
// cartan[i][j] alpha_i. Positive roots and positive coroots must agree in
// number.
std::size_t positive_root_count_oracle(const RootDatum& d) {
    std::size_t n = static_cast<std::size_t>(d.rank);
    std::set<IntVec> all;
    std::vector<IntVec> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        all.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& v : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                IntVec w = v;
                long long pair = 0; // <v, alpha_i^vee> with v in root coords
                for (std::size_t j = 0; j < n; ++j) pair += d.cartan[i][j] * v[j];
                w[i] -= pair;
                if (all.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    std::size_t pos = 0;
    for (const auto& v : all) {
        bool ok = true;
        for (auto c : v) if (c < 0) { ok = false; break; }
        if (ok) ++pos;
    }
    return pos;
}

} // namespace

TEST_CASE("build_root_datum basic shapes") {
    auto a1 = build_root_datum(CartanType::A, 1);
    CHECK(a1.positive_coroots.size() == 1);
    CHECK(a1.cartan == IntMat{{2}});

    auto a2 = build_root_datum(CartanType::A, 2);
    REQUIRE(a2.positive_coroots.size() == 3);
    CHECK(a2.positive_coroots[0] == IntVec{1, 0});
    CHECK(a2.positive_coroots[1] == IntVec{0, 1});
    CHECK(a2.positive_coroots[2] == IntVec{1, 1});

    auto g2 = build_root_datum(CartanType::G, 2);
    CHECK(g2.positive_coroots.size() == 6);
    CHECK(g2.cartan == IntMat{{2, -1}, {-3, 2}});

    CHECK_THROWS_AS(build_root_datum(CartanType::A, 9), UnsupportedType);
    CHECK_THROWS_AS(build_root_datum(CartanType::B, 3), UnsupportedType);
}

TEST_CASE("positive system agrees with the root-side closure oracle") {
    for (auto [t, r] : {std::pair{CartanType::A, 2}, {CartanType::A, 3}, {CartanType::B, 2},
                        {CartanType::C, 2}, {CartanType::G, 2}, {CartanType::D, 4}}) {
        auto d = build_root_datum(t, r);
        CHECK(d.positive_coroots.size() == positive_root_count_oracle(d));
    }
}

TEST_CASE("weyl_enumerate orders and lengths") {
    auto a1 = build_root_datum(CartanType::A, 1);
    CHECK(weyl_enumerate(a1).size() == 2);

    auto a2 = build_root_datum(CartanType::A, 2);
    auto w2 = weyl_enumerate(a2);
    REQUIRE(w2.size() == 6);
    std::vector<int> lengths;
    for (const auto& w : w2) lengths.push_back(w.length());
    CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});

    CHECK(weyl_enumerate(build_root_datum(CartanType::G, 2)).size() == 12);

    for (auto [t, r] : {std::pair{CartanType::A, 3}, {CartanType::B, 2}, {CartanType::D, 4}}) {
        auto d = build_root_datum(t, r);
        CHECK(weyl_enumerate(d).size() == expected_weyl_order(d));
    }
}

TEST_CASE("inversion sets") {
    auto a2 = build_root_datum(CartanType::A, 2);
    auto ws = weyl_enumerate(a2);
    CHECK(inversion_set(a2, ws[0]).empty());
    // ws[1] is s_0 by BFS order
    REQUIRE(ws[1].word == std::vector<int>{0});
    CHECK(inversion_set(a2, ws[1]) == std::vector<int>{0});
    // longest element inverts everything
    CHECK(inversion_set(a2, ws[5]).size() == 3);

    for (const auto& w : ws)
        CHECK(static_cast<int>(inversion_set(a2, w).size()) == w.length());
}

TEST_CASE("weyl elements permute the signed coroots and signs alternate") {
    for (auto [t, r] : {std::pair{CartanType::A, 2}, {CartanType::B, 2}, {CartanType::G, 2}}) {
        auto d = build_root_datum(t, r);
        auto ws = weyl_enumerate(d);
        long long signsum = 0;
        std::set<IntVec> pm;
        for (const auto& c : d.positive_coroots) {
            pm.insert(c);
            IntVec n = c;
            for (auto& v : n) v = -v;
            pm.insert(n);
        }
        for (const auto& w : ws) {
            signsum += (w.length() % 2 == 0) ? 1 : -1;
            for (const auto& c : d.positive_coroots) {
                CHECK(pm.count(mat_apply(w.coroot_action, c)) == 1);
                // inverse really is the inverse
                CHECK(mat_apply(w.inverse_action, mat_apply(w.coroot_action, c)) == c);
            }
        }
        CHECK(signsum == 0);
    }
}

TEST_CASE("pairing forms") {
    auto a1 = build_root_datum(CartanType::A, 1);
    auto w1 = weyl_enumerate(a1);
    LinearForm f = pairing_form_identity(a1, a1.positive_coroots[0], true);
    CHECK(f.coeffs == IntVec{1});
    CHECK(f.constant == -1); // lambda_1 - 1

    LinearForm g = pairing_form(a1, w1[1], a1.positive_coroots[0], true);
    CHECK(g.coeffs == IntVec{-1});
    CHECK(g.constant == -1); // -lambda_1 - 1

    auto a2 = build_root_datum(CartanType::A, 2);
    LinearForm h = pairing_form_identity(a2, a2.positive_coroots[2], false);
    CHECK(h.coeffs == IntVec{1, 1}); // lambda_1 + lambda_2
    CHECK(h.constant == 0);

    // constant = -height for every positive coroot
    for (auto [t, r] : {std::pair{CartanType::A, 3}, {CartanType::G, 2}}) {
        auto d = build_root_datum(t, r);
        for (const auto& c : d.positive_coroots)
            CHECK(pairing_form_identity(d, c, true).constant == -d.height(c));
    }
}
