#include "e6/modsolve.hpp"

#include <stdexcept>

namespace e6 {

namespace {

int valuation(i64 x, i64 p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % p == 0 && v < cap) {
        x /= p;
        ++v;
    }
    return v;
}

struct PrimePowerResult {
    bool ok = true;
    std::vector<i64> y;
    std::vector<i64> chi;
};

// Smith-style elimination over the chain ring Z/p^a
PrimePowerResult solve_prime_power(const ModSystem& sys, i64 p, int a) {
    i64 pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    const std::size_t n = sys.a.size(), m = sys.unknowns;

    IntMatrix w = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) w[i][j] = mod(sys.a[i][j], pa);
    IntMatrix P = identity(n), Q = identity(m);
    std::vector<int> vals;

    std::size_t t = 0;
    for (; t < n && t < m; ++t) {
        int best = a;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < n && best > 0; ++i)
            for (std::size_t j = t; j < m; ++j) {
                int v = valuation(w[i][j], p, a);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (!v) break;
                }
            }
        if (best == a) break;
        std::swap(w[t], w[bi]);
        std::swap(P[t], P[bi]);
        if (bj != t) {
            for (auto& row : w) std::swap(row[t], row[bj]);
            for (auto& row : Q) std::swap(row[t], row[bj]);
        }
        i64 pv = 1;
        for (int k = 0; k < best; ++k) pv *= p;
        const i64 unit_inv = inv_mod(w[t][t] / pv, pa);
        for (std::size_t i = t + 1; i < n; ++i) {
            if (!w[i][t]) continue;
            i64 f = mulmod(w[i][t] / pv, unit_inv, pa);
            for (std::size_t j = t; j < m; ++j) w[i][j] = mod(w[i][j] - mulmod(f, w[t][j], pa), pa);
            for (std::size_t j = 0; j < n; ++j) P[i][j] = mod(P[i][j] - mulmod(f, P[t][j], pa), pa);
        }
        for (std::size_t j = t + 1; j < m; ++j) {
            if (!w[t][j]) continue;
            i64 g = mulmod(w[t][j] / pv, unit_inv, pa);
            w[t][j] = 0;
            for (std::size_t i = 0; i < m; ++i) Q[i][j] = mod(Q[i][j] - mulmod(g, Q[i][t], pa), pa);
        }
        vals.push_back(best);
    }
    const std::size_t rank = t;

    std::vector<i64> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        i64 s = 0;
        for (std::size_t j = 0; j < n; ++j) s = mod(s + mulmod(P[i][j], sys.b[j], pa), pa);
        c[i] = s;
    }

    PrimePowerResult r;
    std::vector<i64> z(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int need = i < rank ? vals[i] : a;
        if (valuation(c[i], p, a) >= need) {
            if (i < rank) {
                i64 pv = 1;
                for (int k = 0; k < need; ++k) pv *= p;
                i64 unit = w[i][i] / pv;
                z[i] = mulmod(c[i] / pv, inv_mod(unit, pa), pa);
            }
            continue;
        }
        // row i of P, scaled to kill the pivot, pairs to zero with A but not with b
        i64 scale = 1;
        for (int k = need; k < a; ++k) scale *= p;
        if (i >= rank) scale = 1;
        r.ok = false;
        r.chi.assign(n, 0);
        for (std::size_t j = 0; j < n; ++j) r.chi[j] = mulmod(scale, P[i][j], pa);
        return r;
    }
    r.y.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        i64 s = 0;
        for (std::size_t j = 0; j < m; ++j) s = mod(s + mulmod(Q[i][j], z[j], pa), pa);
        r.y[i] = s;
    }
    return r;
}

}  // namespace

ModSolution solve_mod(const ModSystem& sys) {
    if (sys.modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (sys.b.size() != sys.a.size()) throw std::invalid_argument("rhs length mismatch");
    for (const auto& row : sys.a)
        if (row.size() != sys.unknowns) throw std::invalid_argument("row length mismatch");

    ModSolution out;
    out.solvable = true;
    out.y.assign(sys.unknowns, 0);
    i64 acc_mod = 1;
    for (auto [p, a] : factorize(sys.modulus)) {
        PrimePowerResult r = solve_prime_power(sys, p, a);
        i64 pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        if (!r.ok) {
            out.solvable = false;
            out.y.clear();
            const i64 cof = sys.modulus / pa;
            out.certificate.assign(r.chi.size(), 0);
            for (std::size_t j = 0; j < r.chi.size(); ++j) out.certificate[j] = mulmod(cof, r.chi[j], sys.modulus);
            return out;
        }
        // CRT: combine y (mod acc_mod) with r.y (mod pa)
        const i64 inv = inv_mod(acc_mod % pa, pa);
        for (std::size_t j = 0; j < sys.unknowns; ++j) {
            i64 k = mulmod(mod(r.y[j] - out.y[j], pa), inv, pa);
            out.y[j] = out.y[j] + acc_mod * k;
        }
        acc_mod *= pa;
    }
    return out;
}

bool check_solution(const ModSystem& sys, const std::vector<i64>& y) {
    if (y.size() != sys.unknowns) return false;
    for (std::size_t i = 0; i < sys.a.size(); ++i) {
        i64 s = 0;
        for (std::size_t j = 0; j < sys.unknowns; ++j) s = mod(s + mulmod(sys.a[i][j], y[j], sys.modulus), sys.modulus);
        if (s != mod(sys.b[i], sys.modulus)) return false;
    }
    return true;
}

bool check_certificate(const ModSystem& sys, const std::vector<i64>& chi) {
    if (chi.size() != sys.a.size()) return false;
    for (std::size_t j = 0; j < sys.unknowns; ++j) {
        i64 s = 0;
        for (std::size_t i = 0; i < chi.size(); ++i) s = mod(s + mulmod(chi[i], sys.a[i][j], sys.modulus), sys.modulus);
        if (s) return false;
    }
    i64 s = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) s = mod(s + mulmod(chi[i], sys.b[i], sys.modulus), sys.modulus);
    return s != 0;
}

}  // namespace e6
