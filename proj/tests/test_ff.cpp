#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "e6/ff.hpp"

using namespace e6;

namespace {

// naive polynomial arithmetic mod (f, p), independent of FieldCtx
std::vector<int> naive_mul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& f, int p) {
    const std::size_t n = f.size() - 1;
    std::vector<int> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = 2 * n - 1; k >= n; --k) {
        const int c = prod[k];
        if (!c) continue;
        for (std::size_t i = 0; i <= n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * f[i]) % p + p) % p;
    }
    prod.resize(n);
    return prod;
}

std::vector<int> coords(const FieldCtx& F, const FieldElement& a) {
    return std::vector<int>(a.c.begin(), a.c.begin() + F.degree());
}

}  // namespace

TEST_CASE("prime powers") {
    int p = 0, e = 0;
    CHECK(prime_power(9, p, e));
    CHECK((p == 3 && e == 2));
    CHECK(prime_power(2, p, e));
    CHECK(prime_power(13, p, e));
    CHECK(!prime_power(6, p, e));
    CHECK(!prime_power(1, p, e));
    CHECK(!prime_power(0, p, e));
    CHECK(is_prime(251));
    CHECK(!is_prime(91));
}

TEST_CASE("irreducibility by exhaustive root and factor search") {
    // x^2 + 1 over F_3 is irreducible, over F_5 it is not
    CHECK(is_irreducible({1, 0, 1}, 3));
    CHECK(!is_irreducible({1, 0, 1}, 5));
    // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2
    CHECK(!is_irreducible({1, 0, 1, 0, 1}, 2));
    CHECK(is_irreducible({1, 1, 0, 0, 1}, 2));
    // count monic irreducible quartics over F_2: (2^4 - 2^2) / 4 = 3
    int count = 0;
    for (int m = 0; m < 16; ++m) {
        std::vector<int> f{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1, 1};
        count += is_irreducible(f, 2);
    }
    CHECK(count == 3);
}

TEST_CASE("small fields against naive arithmetic") {
    for (auto [p, e, k] : std::vector<std::tuple<int, int, int>>{{2, 1, 4}, {3, 2, 1}, {5, 1, 2}, {2, 2, 3}, {7, 1, 2}}) {
        const FieldCtx F(p, e, k);
        CAPTURE(F.size());
        const std::vector<int>& f = F.modulus();
        CHECK(is_irreducible(f, p));
        std::set<std::uint64_t> powers;
        FieldElement g = F.one();
        for (i64 i = 0; i < F.group_order(); ++i) {
            powers.insert(F.index(g));
            CHECK(F.dlog(g) == i);
            g = F.mul(g, F.generator());
        }
        CHECK(g == F.one());
        CHECK(powers.size() == static_cast<std::size_t>(F.group_order()));
        for (std::uint64_t i = 0; i < F.size(); ++i)
            for (std::uint64_t j = 0; j < F.size(); j += 3) {
                const FieldElement a = F.from_index(i), b = F.from_index(j);
                CHECK(F.index(a) == i);
                CHECK(coords(F, F.mul(a, b)) == naive_mul(coords(F, a), coords(F, b), f, p));
                CHECK(F.sub(F.add(a, b), b) == a);
                if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
            }
    }
}

TEST_CASE("Frobenius is additive and fixes the base field") {
    const FieldCtx F(3, 1, 4);
    for (std::uint64_t i = 0; i < F.size(); i += 7)
        for (std::uint64_t j = 0; j < F.size(); j += 11) {
            const FieldElement a = F.from_index(i), b = F.from_index(j);
            CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        }
    for (int a = 0; a < 3; ++a) CHECK(F.frobenius(F.from_int(a)) == F.from_int(a));
    CHECK(F.pow(F.generator(), F.group_order()) == F.one());
}

TEST_CASE("discrete logarithms in larger fields") {
    const FieldCtx F(5, 1, 8);  // 390625 elements
    for (i64 e : {0LL, 1LL, 12345LL, 390623LL, 200000LL}) CHECK(F.dlog(F.gen_pow(e)) == e);
    CHECK(F.element_order(F.gen_pow(4)) == F.group_order() / 4);
    CHECK(F.element_order(F.minus_one()) == 2);
}

TEST_CASE("roots with prescribed order and power") {
    const FieldCtx F(3, 1, 4);  // 80 = 2^4 * 5
    const FieldElement z = F.root_with_property({5, 0});
    CHECK(F.element_order(z) == 5);
    const FieldElement t = F.root_with_property({0, 10});
    CHECK(F.pow(t, 10) == F.minus_one());
    const FieldElement u = F.root_with_property({16, 8});
    CHECK(F.element_order(u) == 16);
    CHECK(F.pow(u, 8) == F.minus_one());
    CHECK(F.dlog(u) == F.root_exponent({16, 8}));
    CHECK_THROWS_AS(F.root_with_property({7, 0}), std::domain_error);
    CHECK_THROWS_AS(F.root_with_property({0, 80}), std::domain_error);
}

TEST_CASE("size caps") {
    CHECK_THROWS(FieldCtx(13, 1, 12, 1000000));
    CHECK_NOTHROW(FieldCtx(13, 1, 2, 1000));
}
