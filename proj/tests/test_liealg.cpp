#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "e6/context.hpp"
#include "e6/words.hpp"

using namespace e6;

namespace {

TitsElement random_tits(const TitsGroup& T, std::mt19937_64& rng) {
    TitsElement t = T.h(static_cast<HBits>(rng() % 64));
    for (int i = 0; i < 20; ++i) t = T.mul(t, T.n(static_cast<RootId>(rng() % 6)));
    return t;
}

}  // namespace

TEST_CASE("n_r from exponentials of ad-matrices agrees with the sign model") {
    const Context& ctx = context();
    const AdjointRep ad(ctx.rs);
    for (RootId r = 0; r < kPositive; ++r) {
        CHECK(ctx.tits.matrix(ctx.tits.n(r)) == ad.n_matrix(r));
        CHECK(ctx.tits.matrix(ctx.tits.h_root(r)) == ad.h_matrix(r));
        CHECK(ctx.tits.from_matrix(ad.n_matrix(r)) == ctx.tits.n(r));
    }
}

TEST_CASE("ad e_r is nilpotent of degree at most 3 on the adjoint module") {
    const AdjointRep ad(build_e6());
    for (RootId r : {0, 13, 35, 36, 71}) {
        const IntMatrix x = ad.ad(r);
        const IntMatrix x3 = mul(mul(x, x), x);
        bool x3_zero = true;
        for (const auto& row : x3)
            for (i64 v : row) x3_zero = x3_zero && v == 0;
        CHECK(x3_zero);
    }
}

TEST_CASE("n_r acts by Lie algebra automorphisms") {
    const Context& ctx = context();
    const AdjointRep ad(ctx.rs);
    std::mt19937_64 rng(5);
    for (RootId r : {0, 1, 5, 13, 35}) {
        const IntMatrix m = ad.n_matrix(r);
        for (int trial = 0; trial < 200; ++trial) {
            const int a = static_cast<int>(rng() % kAdjointDim), b = static_cast<int>(rng() % kAdjointDim);
            std::vector<i64> lhs(kAdjointDim, 0), rhs(kAdjointDim, 0);
            for (auto [c, v] : ad.bracket(a, b))
                for (int i = 0; i < kAdjointDim; ++i) lhs[i] += m[i][c] * v;
            for (int i = 0; i < kAdjointDim; ++i)
                for (int j = 0; j < kAdjointDim; ++j) {
                    if (!m[i][a] || !m[j][b]) continue;
                    for (auto [c, v] : ad.bracket(i, j)) rhs[c] += m[i][a] * m[j][b] * v;
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("n_r squared is h_r(-1)") {
    const TitsGroup& T = context().tits;
    for (RootId r = 0; r < kPositive; ++r) {
        CHECK(T.mul(T.n(r), T.n(r)) == T.h_root(r));
        CHECK(T.inverse(T.n(r)) == T.n(RootSystem::negate(r)));
    }
}

TEST_CASE("eta signs") {
    const Context& ctx = context();
    const TitsGroup& T = ctx.tits;
    for (RootId s = 0; s < kPositive; ++s) CHECK(T.eta(s, s) == -1);
    for (RootId s = 0; s < kPositive; ++s)
        for (RootId r = 0; r < kPositive; ++r) {
            const RootId img = ctx.weyl.act(ctx.weyl.reflection(s), r);
            const TitsElement lhs = T.mul(T.mul(T.n(s), T.n(r)), T.inverse(T.n(s)));
            const TitsElement nimg = T.n(img);
            CHECK(lhs == (T.eta(s, r) == 1 ? nimg : T.mul(T.h_root(RootSystem::positive_part(img)), nimg)));
        }
}

TEST_CASE("Tits group multiplication matches matrices") {
    const TitsGroup& T = context().tits;
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const TitsElement a = random_tits(T, rng), b = random_tits(T, rng);
        CHECK(T.matrix(T.mul(a, b)) == mul(T.matrix(a), T.matrix(b)));
        CHECK(T.mul(a, T.inverse(a)) == T.identity());
        CHECK(T.from_matrix(T.matrix(a)) == a);
    }
}

TEST_CASE("h-part decomposition and the cocycle") {
    const Context& ctx = context();
    const TitsGroup& T = ctx.tits;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const TitsElement a = random_tits(T, rng), b = random_tits(T, rng);
        CHECK(T.mul(T.h(T.h_part(a)), T.canonical_lift(a.weyl)) == a);
        const TitsElement lhs = T.mul(T.canonical_lift(a.weyl), T.canonical_lift(b.weyl));
        const TitsElement rhs = T.mul(T.h(T.cocycle(a.weyl, b.weyl)), T.canonical_lift(ctx.weyl.mul(a.weyl, b.weyl)));
        CHECK(lhs == rhs);
    }
    for (int bits = 0; bits < 64; ++bits) CHECK(T.h_part_solve(T.h_signs(static_cast<HBits>(bits))) == bits);
}

TEST_CASE("braid relations hold for the simple n_i") {
    const Context& ctx = context();
    const TitsGroup& T = ctx.tits;
    const Mat6& c = ctx.rs.cartan();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const TitsElement a = T.n(i), b = T.n(j);
            if (c[i][j] == 0) {
                CHECK(T.mul(a, b) == T.mul(b, a));
            } else {
                CHECK(T.mul(T.mul(a, b), a) == T.mul(T.mul(b, a), b));
            }
        }
}

TEST_CASE("canonical lifts of reduced words") {
    const Context& ctx = context();
    const TitsGroup& T = ctx.tits;
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const Elt x = static_cast<Elt>(rng() % ctx.weyl.size());
        std::vector<int> word = ctx.weyl.reduced_word(x);
        CHECK(T.n_word(word) == T.canonical_lift(x));
        CHECK(static_cast<int>(word.size()) == ctx.weyl.length(x));
    }
}

TEST_CASE("word parsing") {
    const Context& ctx = context();
    const TitsGroup& T = ctx.tits;
    CHECK(T.h_part(parse_tits_word(T, "n19n26n19n26")) == ((1 << 0) | (1 << 3)));
    CHECK(hbits_to_string(0b101) == "h1h3");
    CHECK(parse_tits_word(T, "1") == T.identity());
    CHECK(parse_weyl_word(ctx.weyl, "w14") == ctx.weyl.reflection(13));
    CHECK(tits_word_of(T, "w3w2") == T.mul(T.n(2), T.n(1)));
    CHECK_THROWS(parse_tits_word(T, "w3"));
    CHECK_THROWS(parse_weyl_word(ctx.weyl, "h3"));
    CHECK_THROWS(parse_tits_word(T, "n37"));
}
