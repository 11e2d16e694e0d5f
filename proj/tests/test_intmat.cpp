#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e6/coset_enum.hpp"
#include "e6/intmat.hpp"
#include "e6/modsolve.hpp"

using namespace e6;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, i64 bound) {
    std::uniform_int_distribution<i64> d(-bound, bound);
    IntMatrix a = zeros(r, c);
    for (auto& row : a)
        for (i64& x : row) x = d(rng);
    return a;
}

i64 det_small(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    i64 s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix m;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<i64> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            m.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * a[0][j] * det_small(m);
    }
    return s;
}

constexpr i64 kPrimes[] = {2305843009213693951LL, 1000000007LL, 998244353LL};

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, i64 p) {
    IntMatrix r = zeros(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = (r[i][j] + mulmod(a[i][k], b[k][j], p)) % p;
    return r;
}

i64 det_mod(IntMatrix a, i64 p) {
    const std::size_t n = a.size();
    for (auto& row : a)
        for (i64& x : row) x = mod(x, p);
    i64 d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = mod(-d, p);
        }
        d = mulmod(d, a[c][c], p);
        const i64 inv = inv_mod(a[c][c], p);
        for (std::size_t i = c + 1; i < n; ++i) {
            const i64 f = mulmod(a[i][c], inv, p);
            for (std::size_t j = c; j < n; ++j) a[i][j] = mod(a[i][j] - mulmod(f, a[c][j], p), p);
        }
    }
    return d;
}

IntMatrix reduce(IntMatrix a, i64 p) {
    for (auto& row : a)
        for (i64& x : row) x = mod(x, p);
    return a;
}

// every y in (Z/m)^n, counting solutions
bool brute_solvable(const ModSystem& s) {
    std::vector<i64> y(s.unknowns, 0);
    while (true) {
        if (check_solution(s, y)) return true;
        std::size_t i = 0;
        while (i < y.size() && ++y[i] == s.modulus) y[i++] = 0;
        if (i == y.size()) return false;
    }
}

}  // namespace

TEST_CASE("Smith form satisfies u a v = diag with divisibility, or reports overflow") {
    std::mt19937_64 rng(1);
    int overflows = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const IntMatrix a = random_matrix(rng, r, c, trial < 300 ? 3 : 40);
        SmithForm s;
        try {
            s = smith_form(a);
        } catch (const std::overflow_error&) {
            ++overflows;
            continue;
        }
        // u a v = diag(d) and unimodularity, checked modulo three primes
        IntMatrix diag = zeros(r, c);
        for (std::size_t i = 0; i < s.d.size(); ++i) diag[i][i] = s.d[i];
        for (i64 p : kPrimes) {
            CHECK(mul_mod(mul_mod(s.u, a, p), s.v, p) == reduce(diag, p));
            CHECK(mul_mod(s.u, s.uinv, p) == identity(r));
            const i64 du = det_mod(s.u, p), dv = det_mod(s.v, p);
            CHECK((du == 1 || du == p - 1));
            CHECK((dv == 1 || dv == p - 1));
        }
        for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.d[i + 1] % s.d[i] == 0);
        for (std::size_t i = 0; i < s.d.size(); ++i) CHECK((i < s.rank) == (s.d[i] != 0));
        if (r == c) {
            i64 prod = 1;
            for (i64 x : s.d) prod *= x;
            CHECK(prod == std::abs(det_small(a)));
        }
        if (trial < 300) CHECK(mul(mul(s.u, a), s.v) == diag);
    }
    CHECK(overflows < 60);
}

TEST_CASE("invariant factors of large 6x6 matrices do not overflow") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        Mat6 a{};
        for (auto& row : a)
            for (i64& x : row) x = static_cast<i64>(rng() % 201) - 100;
        std::vector<i64> inv;
        REQUIRE_NOTHROW(inv = invariant_factors(a));
        i64 prod = 1;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            if (i + 1 < inv.size() && inv[i]) CHECK(inv[i + 1] % inv[i] == 0);
            prod *= inv[i];
        }
        if (det(a) != 0) CHECK(prod == std::abs(det(a)));
    }
}

TEST_CASE("invariant factors of a diagonal matrix") {
    Mat6 a{};
    const i64 diag[6] = {4, 6, 1, 10, 1, 1};
    for (int i = 0; i < 6; ++i) a[i][i] = diag[i];
    CHECK(invariant_factors(a) == std::vector<i64>{2, 2, 60});
    CHECK(abelian_invariants({4, 6, 10}) == std::vector<i64>{2, 2, 60});
    CHECK(abelian_invariants({3, 5}) == std::vector<i64>{15});
    CHECK(abelian_invariants({2, 10, 10}) == std::vector<i64>{2, 10, 10});
}

TEST_CASE("6x6 determinant and adjugate") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        Mat6 a{};
        for (auto& row : a)
            for (i64& x : row) x = static_cast<i64>(rng() % 7) - 3;
        IntMatrix big = from_mat6(a);
        CHECK(det(a) == det_small(big));
        const Mat6 p = mul(a, adjugate(a));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) CHECK(p[i][j] == (i == j ? det(a) : 0));
    }
}

TEST_CASE("checked arithmetic reports overflow") {
    CHECK_THROWS_AS(checked_mul(i64{1} << 40, i64{1} << 40), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK(checked_mul(-3, 7) == -21);
}

TEST_CASE("number theory helpers") {
    CHECK(mult_order(3, 7) == 6);
    CHECK(mult_order(2, 9) == 6);
    CHECK(inv_mod(3, 7) == 5);
    CHECK_THROWS(inv_mod(2, 4));
    CHECK(powmod(5, 117, 19) == 1);
    CHECK(factorize(360) == std::vector<std::pair<i64, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(lcm(4, 6) == 12);
}

TEST_CASE("modular solver agrees with exhaustive search") {
    std::mt19937_64 rng(3);
    int sat = 0, unsat = 0;
    for (int trial = 0; trial < 400; ++trial) {
        ModSystem s;
        const i64 moduli[] = {2, 4, 6, 8, 9, 12};
        s.modulus = moduli[rng() % 6];
        s.unknowns = 1 + rng() % 3;
        const std::size_t rows = 1 + rng() % 3;
        s.a = zeros(rows, s.unknowns);
        s.b.assign(rows, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            for (i64& x : s.a[i]) x = static_cast<i64>(rng() % s.modulus);
            s.b[i] = static_cast<i64>(rng() % s.modulus);
        }
        const ModSolution sol = solve_mod(s);
        CHECK(sol.solvable == brute_solvable(s));
        if (sol.solvable) {
            ++sat;
            CHECK(check_solution(s, sol.y));
        } else {
            ++unsat;
            CHECK(check_certificate(s, sol.certificate));
        }
    }
    CHECK(sat > 20);
    CHECK(unsat > 20);
}

TEST_CASE("coset enumeration of small groups") {
    // S3 = <a, b | a^2, b^2, (ab)^3>
    CHECK(enumerate_cosets(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}, 1000) == 6);
    // Z/4 x Z/6
    CHECK(enumerate_cosets(2, {{1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}, {1, 2, -1, -2}}, 1000) == 24);
    // quaternion group
    CHECK(enumerate_cosets(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, 1000) == 8);
    // infinite cyclic group exceeds the limit
    CHECK(enumerate_cosets(1, {}, 100) == 0);
}
