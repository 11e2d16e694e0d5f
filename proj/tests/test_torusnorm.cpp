#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "e6/classes.hpp"
#include "e6/torusnorm.hpp"
#include "e6/words.hpp"

using namespace e6;

namespace {

constexpr i64 kBig = 1000002;  // even, prime to 5

TorusElement tup(std::initializer_list<i64> v, i64 m) {
    TorusElement h;
    std::size_t i = 0;
    for (i64 x : v) h.e[i++] = ((x % m) + m) % m;
    return h;
}

TorusElement random_torus(std::mt19937_64& rng, i64 m) {
    TorusElement h;
    for (i64& x : h.e) x = static_cast<i64>(rng() % static_cast<std::uint64_t>(m));
    return h;
}

TitsElement tw(const std::string& s) { return parse_tits_word(context().tits, s); }

}  // namespace

TEST_CASE("act reproduces the worked conjugation examples") {
    const TorusOps ops(TorusModel(5, kBig));
    const i64 l1 = 1, l2 = 10, l3 = 100, l4 = 1000, l5 = 10000, l6 = 100000;
    const TorusElement h = tup({l1, l2, l3, l4, l5, l6}, kBig);
    const WeylGroup& W = context().weyl;
    CHECK(ops.act(parse_weyl_word(W, "w1w3"), h) == tup({-l3 + l4, l2, l1 - l3 + l4, l4, l5, l6}, kBig));
    CHECK(ops.act(parse_weyl_word(W, "w2w3w5"), h) == tup({l1, -l2 + l4, l1 - l3 + l4, l4, l4 - l5 + l6, l6}, kBig));
    CHECK(ops.act(W.identity(), h) == h);
}

TEST_CASE("powers reproduce the worked examples") {
    const i64 m = kBig, minus = m / 2;
    const TorusOps ops(TorusModel(5, m));
    const i64 l1 = 1, l2 = 10, l4 = 1000, l5 = 10000, l6 = 100000;
    const TorusElement h = tup({l1, l2, 100, l4, l5, l6}, m);
    const NormalizerElement a = ops.make(h, tw("n1n3"));
    CHECK(ops.power(a, 3) == NormalizerElement{tup({l4, 3 * l2, 2 * l4, 3 * l4, 3 * l5, 3 * l6}, m), 0});
    const NormalizerElement b = ops.make(h, tw("n2n3n5"));
    CHECK(ops.power(b, 2) ==
          NormalizerElement{tup({2 * l1, minus + l4, minus + l1 + l4, 2 * l4, minus + l4 + l6, 2 * l6}, m), 0});
    CHECK(ops.power(a, 1) == a);
    CHECK(ops.power_by_sum(h, tw("n2n3n5"), 2) == ops.power(b, 2));
}

TEST_CASE("n_r squared picks up h_r") {
    const TorusOps ops(TorusModel(5, kBig));
    for (int r = 1; r <= 36; ++r) {
        const NormalizerElement n = ops.from_tits(tw("n" + std::to_string(r)));
        CHECK(ops.multiply(n, n) == ops.from_tits(tw("h" + std::to_string(r))));
    }
    CHECK(ops.from_tits(tw("h1")) == NormalizerElement{tup({kBig / 2, 0, 0, 0, 0, 0}, kBig), 0});
}

TEST_CASE("Frobenius convention: conjugate first, then q-th power") {
    // class 2 at q = 3, zeta of order 8 with zeta^4 = -1
    const TorusOps ops(TorusModel(3, 8));
    const TwistData t = make_twist(2, 3);
    const TorusElement h1 = tup({1, 0, 4, 0, 0, 0}, 8);
    CHECK(ops.sigma(ops.act(t.w, h1)) == tup({4 - 3, 0, 4, 0, 0, 0}, 8));
    CHECK(ops.in_torus(h1, t));
    CHECK(ops.in_torus(ops.one(), t));
    CHECK(!ops.in_torus(tup({1, 0, 0, 0, 0, 0}, 8), t));
    // sigma commutes with act
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const TorusElement h = random_torus(rng, 8);
        const Elt x = static_cast<Elt>(rng() % context().weyl.size());
        CHECK(ops.sigma(ops.act(x, h)) == ops.act(x, ops.sigma(h)));
    }
}

TEST_CASE("torus members from the worked constructions") {
    const TorusOps ops(TorusModel(3, 8));  // xi of order 8, xi^4 = -1
    CHECK(ops.in_torus(tup({1, 4, 4, -1, 4, 1}, 8), make_twist(18, 3)));
    const TwistData t22 = make_twist(22, 3);
    CHECK(ops.normalizer_membership(tup({2, 1, 1, 0, 1, 2}, 8), tw("n24"), t22));
    const TorusOps ops5(TorusModel(5, 24));
    const TwistData t5 = make_twist(5, 5);
    CHECK(ops5.normalizer_membership(ops5.one(), tw("h4h6n20n21"), t5));
    CHECK(context().tits.commutator(tw("h4h6n20n21"), tw("n2n3n5")) == context().tits.identity());
    CHECK_THROWS(ops5.normalizer_membership(ops5.one(), tw("n1"), t5));
}

TEST_CASE("center of the simply connected group") {
    const TorusOps ops(TorusModel(5, 24));
    const TorusElement z = ops.center_element();
    CHECK(z == tup({8, 0, 16, 0, 8, 16}, 24));
    CHECK(z != ops.one());
    CHECK(ops.pow(z, 3) == ops.one());
    for (int i = 1; i <= 6; ++i) CHECK(ops.act(context().weyl.gen(i), z) == z);
    CHECK(ops.is_central(z));
    CHECK(ops.adjoint_equal(z, ops.one()));
    CHECK(ops.adjoint_equal(ops.pow(z, 2), ops.one()));
    CHECK(!ops.adjoint_equal(tup({8, 0, 0, 0, 0, 0}, 24), ops.one()));
    CHECK(!ops.is_central(tup({8, 0, 0, 0, 0, 0}, 24)));
}

TEST_CASE("torus orders match the polynomials") {
    for (i64 q : {2, 3, 4, 5, 7, 8, 9, 13})
        for (int cls = 1; cls <= 25; ++cls) {
            CAPTURE(cls);
            CAPTURE(q);
            CHECK(torus_order(cls, q) == expected_torus_order(cls, q));
            const TorusStructure s = torus_structure(cls, q);
            i64 prod = 1;
            for (i64 d : s.invariant_factors) prod *= d;
            CHECK(prod == s.order);
            CHECK(s.order == torus_order(cls, q));
        }
    CHECK(torus_order(1, 3) == 64);
    CHECK(torus_order(24, 9) == 532171);
    CHECK(torus_structure(19, 3).invariant_factors == std::vector<i64>{8 * 82});
    CHECK(torus_structure(19, 5).invariant_factors.size() == 1);
}

TEST_CASE("torus generators are members and generate |T| elements") {
    for (i64 q : {2, 3, 4, 5})
        for (int cls = 1; cls <= 25; ++cls) {
            const TorusStructure s = torus_structure(cls, q);
            if (s.order > 1000000) continue;
            CAPTURE(cls);
            CAPTURE(q);
            const TorusModel model(q, s.modulus);
            const TorusOps ops(model);
            const TwistData t = make_twist(cls, q);
            for (std::size_t i = 0; i < s.generators.size(); ++i) {
                CHECK(ops.in_torus(s.generators[i], t));
                CHECK(ops.pow(s.generators[i], s.invariant_factors[i]) == ops.one());
                for (auto [pr, e] : factorize(s.invariant_factors[i]))
                    CHECK(ops.pow(s.generators[i], s.invariant_factors[i] / pr) != ops.one());
            }
            const std::vector<TorusElement> all = enumerate_torus(model, s);
            CHECK(all.size() == static_cast<std::size_t>(s.order));
            std::set<Vec6> distinct;
            for (const TorusElement& h : all) distinct.insert(h.e);
            CHECK(distinct.size() == all.size());
        }
}

TEST_CASE("field model round trip") {
    const FieldCtx F(3, 1, 4);
    const TorusModel model = TorusModel::from_field(F);
    const TorusOps ops(model);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const TorusElement h = random_torus(rng, model.modulus());
        const auto lambdas = ops.to_field(h);
        CHECK(ops.from_field(lambdas) == h);
        CHECK(F.pow(lambdas[0], model.q()) == ops.to_field(ops.sigma(h))[0]);
    }
    CHECK(model.ambient_k() == 4);
    CHECK(TorusModel(3, 8).ambient_k() == 2);
}

TEST_CASE("normalizer laws on random elements of every class") {
    const WeylGroup& W = context().weyl;
    for (int cls = 1; cls <= 25; ++cls) {
        CAPTURE(cls);
        const i64 q = cls % 2 ? 5 : 4;
        const TwistData t = make_twist(cls, q);
        const TorusModel model(q, decision_modulus(W, t.w, q, true));
        const TorusOps ops(model);
        const TorusStructure s = torus_structure_in(model, t.w);
        const std::vector<Elt> cent = W.centralizer(t.w);
        std::mt19937_64 rng(100 + cls);
        auto in_t = [&] {
            TorusElement h = ops.one();
            for (std::size_t i = 0; i < s.generators.size(); ++i)
                h = ops.mul(h, ops.pow(s.generators[i], static_cast<i64>(rng() % 1000)));
            return h;
        };
        auto in_n = [&] {
            const Elt x = cent[rng() % cent.size()];
            return NormalizerElement{ops.mul(*ops.coset_particular_solution(x, t), in_t()), x};
        };
        auto ambient = [&] {
            return NormalizerElement{random_torus(rng, model.modulus()), static_cast<Elt>(rng() % W.size())};
        };
        std::array<int, 12> failures{};
        auto law = [&](int i, bool ok) { failures[static_cast<std::size_t>(i)] += !ok; };
        for (int trial = 0; trial < 10000; ++trial) {
            const NormalizerElement a = ambient(), b = ambient(), c = ambient();
            const NormalizerElement ab = ops.multiply(a, b);
            law(0, ops.multiply(ab, c) == ops.multiply(a, ops.multiply(b, c)));
            law(1, ops.multiply(a, ops.identity()) == a && ops.multiply(ops.identity(), a) == a);
            law(2, ops.multiply(a, ops.inverse(a)) == ops.identity());
            law(3, ops.act(W.mul(a.x, b.x), c.h) == ops.act(a.x, ops.act(b.x, c.h)));
            law(4, ops.act(a.x, ops.mul(b.h, c.h)) == ops.mul(ops.act(a.x, b.h), ops.act(a.x, c.h)));
            law(5, ops.sigma(ab) == ops.multiply(ops.sigma(a), ops.sigma(b)));
            const int m = 1 + static_cast<int>(rng() % 12);
            NormalizerElement acc = ops.identity();
            for (int k = 0; k < m; ++k) acc = ops.multiply(acc, a);
            law(6, ops.power(a, m) == acc);
            law(7, ops.conjugate(a, b) == ops.multiply(ops.multiply(b, a), ops.inverse(b)));
            law(8, ops.commutator(a, b) == ops.multiply(ops.multiply(a, b), ops.inverse(ops.multiply(b, a))));
            const NormalizerElement u = in_n(), v = in_n();
            law(9, ops.in_normalizer(u, t) && ops.in_normalizer(ops.inverse(u), t));
            law(10, ops.in_normalizer(ops.multiply(u, v), t));
            law(11, ops.in_torus(ops.multiply(ops.multiply(u, {in_t(), 0}), ops.inverse(u)).h, t));
        }
        for (std::size_t i = 0; i < failures.size(); ++i) {
            CAPTURE(i);
            CHECK(failures[i] == 0);
        }
    }
}

TEST_CASE("multiplication agrees with the Tits group on sign-only elements") {
    const Context& ctx = context();
    const TorusOps ops(TorusModel(5, 24));
    std::mt19937_64 rng(14);
    for (int i = 0; i < 2000; ++i) {
        TitsElement a = ctx.tits.h(static_cast<HBits>(rng() % 64)), b = a;
        for (int k = 0; k < 12; ++k) a = ctx.tits.mul(a, ctx.tits.n(static_cast<RootId>(rng() % 36)));
        for (int k = 0; k < 12; ++k) b = ctx.tits.mul(b, ctx.tits.n(static_cast<RootId>(rng() % 36)));
        CHECK(ops.multiply(ops.from_tits(a), ops.from_tits(b)) == ops.from_tits(ctx.tits.mul(a, b)));
    }
}
