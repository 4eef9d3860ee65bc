#pragma once

// Cartan data, positive coroots, Weyl group enumeration and actions.
// Everything weight-side lives in fundamental-weight coordinates, so the
// pairings <w.lambda - rho, a^> are integer affine forms; everything
// coroot-side lives in simple-coroot coordinates.
//
// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so the reflection s_i
// acts on a coroot with coordinates b by  b_i -> b_i - sum_k cartan[k][i] b_k.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "multipoly.hpp"

namespace zetaforge {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>; // row-major, acts on column vectors

inline IntVec mat_apply(const IntMat& m, const IntVec& v) {
    std::size_t n = m.size();
    IntVec r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}
inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}
inline IntMat mat_identity(std::size_t n) {
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

// Integer affine form  sum_i coeffs[i] * lambda_i + constant.
struct LinearForm {
    IntVec coeffs;
    long long constant = 0;

    bool is_constant() const {
        for (auto c : coeffs) if (c != 0) return false;
        return true;
    }
    long long coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
    // fold lambda_i := value into the constant
    LinearForm specialized(std::size_t i, long long value) const {
        LinearForm f = *this;
        f.constant += f.coeffs[i] * value;
        f.coeffs[i] = 0;
        return f;
    }
    LinearForm plus(long long c) const {
        LinearForm f = *this;
        f.constant += c;
        return f;
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.constant < b.constant;
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (!s.empty()) s += coeffs[i] > 0 ? "+" : "";
            s += (coeffs[i] == 1) ? "" : (coeffs[i] == -1 ? "-" : std::to_string(coeffs[i]) + "*");
            s += "s" + std::to_string(i + 1);
        }
        if (s.empty()) return std::to_string(constant);
        if (constant != 0) s += (constant > 0 ? "+" : "") + std::to_string(constant);
        return s;
    }
};

struct WeylElement {
    std::vector<int> word;  // reduced, lex-minimal among BFS discoveries
    IntMat coroot_action;   // acts on simple-coroot coordinates
    IntMat inverse_action;
    int length() const { return static_cast<int>(word.size()); }
};

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct RootDatum {
    CartanType cartan_type;
    int rank = 0;
    IntMat cartan;                   // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<IntVec> positive_coroots; // sorted by (height, lex)
    IntVec rho_coords;               // all ones

    long long height(const IntVec& coroot) const {
        long long h = 0;
        for (auto c : coroot) h += c;
        return h;
    }
    // reflection matrix of s_i on coroot coordinates
    IntMat simple_reflection(int i) const {
        IntMat m = mat_identity(static_cast<std::size_t>(rank));
        for (int k = 0; k < rank; ++k)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= cartan[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        return m;
    }
    std::string type_string() const {
        return std::string(1, static_cast<char>(cartan_type)) + std::to_string(rank);
    }
};

inline RootDatum build_root_datum(CartanType type, int rank) {
    auto unsupported = [&] {
        throw UnsupportedType("unsupported group type " + std::string(1, static_cast<char>(type)) +
                              std::to_string(rank) + " (supported: A1-A3, B2, C2, D4, G2)");
    };
    RootDatum d;
    d.cartan_type = type;
    d.rank = rank;
    std::size_t n = static_cast<std::size_t>(rank);
    switch (type) {
        case CartanType::A: {
            if (rank < 1 || rank > 3) unsupported();
            d.cartan = IntMat(n, IntVec(n, 0));
            for (std::size_t i = 0; i < n; ++i) {
                d.cartan[i][i] = 2;
                if (i + 1 < n) { d.cartan[i][i + 1] = -1; d.cartan[i + 1][i] = -1; }
            }
            break;
        }
        case CartanType::B: {
            if (rank != 2) unsupported();
            d.cartan = {{2, -1}, {-2, 2}};
            break;
        }
        case CartanType::C: {
            if (rank != 2) unsupported();
            d.cartan = {{2, -2}, {-1, 2}};
            break;
        }
        case CartanType::G: {
            if (rank != 2) unsupported();
            d.cartan = {{2, -1}, {-3, 2}};
            break;
        }
        case CartanType::D: {
            if (rank != 4) unsupported();
            d.cartan = IntMat(n, IntVec(n, 0));
            for (std::size_t i = 0; i < n; ++i) d.cartan[i][i] = 2;
            auto link = [&](std::size_t a, std::size_t b) { d.cartan[a][b] = -1; d.cartan[b][a] = -1; };
            link(0, 1); link(1, 2); link(1, 3);
            break;
        }
        default: unsupported();
    }
    d.rho_coords = IntVec(n, 1);

    // coroot closure under simple reflections
    std::set<IntVec> all;
    std::vector<IntVec> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        all.insert(e);
        frontier.push_back(e);
    }
    std::vector<IntMat> refl;
    for (int i = 0; i < rank; ++i) refl.push_back(d.simple_reflection(i));
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& v : frontier)
            for (const auto& m : refl) {
                IntVec w = mat_apply(m, v);
                if (all.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    for (const auto& v : all) {
        bool pos = true;
        for (auto c : v) if (c < 0) { pos = false; break; }
        if (pos) d.positive_coroots.push_back(v);
    }
    // height first; descending lex within a height puts the simple coroots
    // at indices 0..r-1 in index order
    std::sort(d.positive_coroots.begin(), d.positive_coroots.end(), [&](const IntVec& a, const IntVec& b) {
        long long ha = d.height(a), hb = d.height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });

    // sanity on the count per type
    std::size_t expect = 0;
    switch (type) {
        case CartanType::A: expect = n * (n + 1) / 2; break;
        case CartanType::B:
        case CartanType::C: expect = 4; break;
        case CartanType::G: expect = 6; break;
        case CartanType::D: expect = 12; break;
    }
    if (d.positive_coroots.size() != expect)
        throw ContractViolation("positive coroot count mismatch for " + d.type_string());
    for (std::size_t i = 0; i < n; ++i)
        if (d.positive_coroots[i] != [&] { IntVec e(n, 0); e[i] = 1; return e; }())
            throw ContractViolation("simple coroots must lead the positive list");
    return d;
}

inline WeylElement weyl_identity(const RootDatum& d) {
    WeylElement e;
    e.coroot_action = mat_identity(static_cast<std::size_t>(d.rank));
    e.inverse_action = e.coroot_action;
    return e;
}

// Breadth-first by word length with lexicographic tie-break; each element once.
inline std::vector<WeylElement> weyl_enumerate(const RootDatum& d) {
    std::vector<WeylElement> out;
    std::map<IntMat, bool> seen;
    out.push_back(weyl_identity(d));
    seen[out[0].coroot_action] = true;
    std::vector<IntMat> refl;
    for (int i = 0; i < d.rank; ++i) refl.push_back(d.simple_reflection(i));
    std::size_t level_begin = 0;
    while (level_begin < out.size()) {
        std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (int i = 0; i < d.rank; ++i) {
                IntMat m = mat_mul(out[k].coroot_action, refl[static_cast<std::size_t>(i)]);
                if (seen.emplace(m, true).second) {
                    WeylElement w;
                    w.word = out[k].word;
                    w.word.push_back(i);
                    w.coroot_action = std::move(m);
                    w.inverse_action = mat_mul(refl[static_cast<std::size_t>(i)], out[k].inverse_action);
                    out.push_back(std::move(w));
                }
            }
        level_begin = level_end;
    }
    return out;
}

// Indices (into positive_coroots) of the coroots sent negative by w.
inline std::vector<int> inversion_set(const RootDatum& d, const WeylElement& w) {
    std::vector<int> out;
    for (std::size_t p = 0; p < d.positive_coroots.size(); ++p) {
        IntVec img = mat_apply(w.coroot_action, d.positive_coroots[p]);
        bool neg = false, pos = false;
        for (auto c : img) {
            if (c < 0) neg = true;
            if (c > 0) pos = true;
        }
        if (neg && pos) throw ContractViolation("Weyl image of a coroot is neither positive nor negative");
        if (neg) out.push_back(static_cast<int>(p));
    }
    return out;
}

// <w.lambda [- rho], coroot> as an affine form in fundamental-weight
// coordinates: coefficients are the coordinates of w^-1(coroot), the
// constant is -<rho, coroot> = -height(coroot) when subtract_rho.
inline LinearForm pairing_form(const RootDatum& d, const WeylElement& w, const IntVec& coroot, bool subtract_rho) {
    LinearForm f;
    f.coeffs = mat_apply(w.inverse_action, coroot);
    f.constant = subtract_rho ? -d.height(coroot) : 0;
    return f;
}

inline LinearForm pairing_form_identity(const RootDatum& d, const IntVec& coroot, bool subtract_rho) {
    return pairing_form(d, weyl_identity(d), coroot, subtract_rho);
}

inline std::size_t expected_weyl_order(const RootDatum& d) {
    switch (d.cartan_type) {
        case CartanType::A: {
            std::size_t f = 1;
            for (int i = 2; i <= d.rank + 1; ++i) f *= static_cast<std::size_t>(i);
            return f;
        }
        case CartanType::B:
        case CartanType::C: return 8;
        case CartanType::G: return 12;
        case CartanType::D: return 192;
    }
    throw ContractViolation("unknown type");
}

} // namespace zetaforge
