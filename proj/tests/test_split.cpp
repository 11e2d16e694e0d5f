#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6/classes.hpp"
#include "e6/split.hpp"
#include "e6/words.hpp"

using namespace e6;

namespace {

struct Instance {
    SectionProblem problem;
    TorusModel model;
};

Instance full_instance(int cls, i64 q, Mode mode) {
    const Context& ctx = context();
    const Presentation& pres = centralizer_presentation(cls);
    SectionProblem p{make_twist(cls, q), pres.generators, pres.relators, mode};
    return {p, TorusModel(q, decision_modulus(ctx.weyl, p.twist.w, q, mode == Mode::Adjoint))};
}

Instance sub_instance(int cls, i64 q, Mode mode) {
    const Context& ctx = context();
    const Subsystem s = *obstruction_subsystem(cls);
    SectionProblem p{make_twist(cls, q), s.generators, s.relators, mode};
    return {p, TorusModel(q, decision_modulus(ctx.weyl, p.twist.w, q, mode == Mode::Adjoint))};
}

void compare(const Instance& in, std::size_t cap) {
    const TorusOps ops(in.model);
    const SectionResult lin = solve_section(ops, in.problem);
    const std::optional<bool> brute = brute_force_section(ops, in.problem, cap);
    REQUIRE(brute.has_value());
    CHECK(*brute == lin.solvable);
    if (lin.solvable) {
        CHECK(relators_hold(ops, in.problem, lin.witness));
        for (const NormalizerElement& g : lin.witness) CHECK(ops.in_normalizer(g, in.problem.twist));
    } else {
        CHECK(check_certificate(lin.system.system, lin.certificate));
    }
}

TitsElement tw(const std::string& s) { return parse_tits_word(context().tits, s); }

}  // namespace

TEST_CASE("solver agrees with exhaustive lift search on small full presentations") {
    int checked = 0;
    for (int cls = 1; cls <= 25; ++cls) {
        if (torus_order(cls, 3) > 4096 || class_info(cls).centralizer_order > 64) continue;
        for (Mode mode : {Mode::SimplyConnected, Mode::Adjoint}) {
            CAPTURE(cls);
            CAPTURE(to_string(mode));
            compare(full_instance(cls, 3, mode), 5000000);
            ++checked;
        }
    }
    // classes 6 7 9 11 12 13 15 17 18 19 20 22 23 24
    CHECK(checked == 28);
}

TEST_CASE("class 14: section exists at q = 5, not at q = 3") {
    const Instance in5 = full_instance(14, 5, Mode::SimplyConnected);
    const TorusOps ops5(in5.model);
    const SectionResult r5 = solve_section(ops5, in5.problem);
    REQUIRE(r5.solvable);
    CHECK(relators_hold(ops5, in5.problem, r5.witness));
    for (const NormalizerElement& g : r5.witness) CHECK(ops5.in_normalizer(g, in5.problem.twist));
    const Instance in3 = full_instance(14, 3, Mode::SimplyConnected);
    const SectionResult r3 = solve_section(TorusOps(in3.model), in3.problem);
    CHECK(!r3.solvable);
    CHECK(check_certificate(r3.system.system, r3.certificate));
}

TEST_CASE("hand-made subsystems: exhaustive search agrees with the solver at q = 3") {
    for (int cls : {1, 2, 3, 5, 7, 8, 11, 14, 16})
        for (Mode mode : {Mode::SimplyConnected, Mode::Adjoint}) {
            CAPTURE(cls);
            CAPTURE(to_string(mode));
            const Instance in = sub_instance(cls, 3, mode);
            compare(in, 20000000);
            CHECK(!solve_section(TorusOps(in.model), in.problem).solvable);
        }
}

TEST_CASE("hand-made subsystems at q = 5") {
    for (int cls : {1, 2, 3, 7, 14}) {
        CAPTURE(cls);
        compare(sub_instance(cls, 5, Mode::SimplyConnected), 20000000);
    }
    for (int cls : {1, 2, 3, 5, 7, 8, 11, 16}) {
        const ObstructionResult r = obstruction_check(cls, 5, Mode::SimplyConnected);
        CHECK(r.has_subsystem);
        CHECK(!r.solvable);
        CHECK(r.certificate_verified);
    }
    const ObstructionResult r14 = obstruction_check(14, 5, Mode::Adjoint);
    CHECK(r14.solvable);
    CHECK(!obstruction_check(4, 3, Mode::SimplyConnected).has_subsystem);
}

TEST_CASE("empty relator set is trivially solvable") {
    Instance in = full_instance(12, 3, Mode::SimplyConnected);
    in.problem.relators.clear();
    const TorusOps ops(in.model);
    const SectionResult r = solve_section(ops, in.problem);
    CHECK(r.solvable);
    CHECK(r.witness.size() == in.problem.generators.size());
    CHECK(brute_force_section(ops, in.problem, 100000) == std::optional<bool>(true));
}

TEST_CASE("centralizer presentations") {
    const WeylGroup& W = context().weyl;
    for (int cls = 1; cls <= 25; ++cls) {
        CAPTURE(cls);
        const Presentation& p = centralizer_presentation(cls);
        const Elt w = class_representative(W, cls);
        CHECK(p.order == static_cast<std::size_t>(class_info(cls).centralizer_order));
        CHECK(W.closure(p.generators).size() == p.order);
        for (Elt g : p.generators) CHECK(W.mul(g, w) == W.mul(w, g));
        for (const Word& r : p.relators) CHECK(W.evaluate(r, p.generators) == W.identity());
    }
}

TEST_CASE("decisions on named cases") {
    CHECK(decide_complement(14, 5, Mode::SimplyConnected).splits);
    CHECK(!decide_complement(14, 3, Mode::SimplyConnected).splits);
    CHECK(!decide_complement(14, 3, Mode::Adjoint).splits);
    CHECK(decide_complement(4, 3, Mode::SimplyConnected).splits);
    const Decision d1 = decide_complement(1, 4, Mode::SimplyConnected);
    CHECK(d1.splits);
    CHECK(d1.canonical_lifts_split);
    const Decision d8 = decide_complement(8, 3, Mode::Adjoint);
    CHECK(!d8.splits);
    CHECK(d8.certificate_verified);
    CHECK(d8.obstruction_unsolvable == std::optional<bool>(true));
}

TEST_CASE("witness closure is a complement") {
    for (int cls : {12, 17, 19, 24}) {
        CAPTURE(cls);
        const Decision d = decide_complement(cls, 3, Mode::SimplyConnected);
        REQUIRE(d.splits);
        CHECK(d.witness_verified);
        CHECK(d.closure.performed);
        CHECK(d.closure.size == static_cast<std::size_t>(class_info(cls).centralizer_order));
        CHECK(d.closure.torus_intersection_trivial);
        CHECK(d.closure.image_is_centralizer);
    }
    const Instance in = full_instance(12, 3, Mode::SimplyConnected);
    const TorusOps ops(in.model);
    const SectionResult r = solve_section(ops, in.problem);
    // doubling one generator breaks the section
    std::vector<NormalizerElement> bad = r.witness;
    bad[0] = ops.multiply(bad[0], ops.from_tits(tw("h1")));
    const ClosureCheck c = check_closure(ops, in.problem.twist, bad, Mode::SimplyConnected, 100000);
    CHECK((!c.torus_intersection_trivial || c.size != 10));
}

TEST_CASE("class 4: n1n3 does not normalize the torus, n3n1 does") {
    const TitsGroup& T = context().tits;
    const TwistData t = make_twist(4, 3);
    CHECK(T.commutator(t.n, tw("n1n3")) == tw("h1h3"));
    CHECK(T.commutator(t.n, tw("n3n1")) == T.identity());
    const TorusOps ops(TorusModel(3, 8));
    CHECK(!ops.normalizer_membership(ops.one(), tw("n1n3"), t));
    CHECK(ops.normalizer_membership(ops.one(), tw("n3n1"), t));
}

TEST_CASE("class 8: w1w4w6w3 is not a class 8 element, w1w4w6w36 is") {
    const WeylGroup& W = context().weyl;
    CHECK(classify(W, parse_weyl_word(W, "w1w4w6w3")).cls != 8);
    CHECK(classify(W, parse_weyl_word(W, "w1w4w6w36")).cls == 8);
    const TitsGroup& T = context().tits;
    CHECK(T.power(tw("n1n4n6n36"), 4) == T.identity());
    CHECK(T.commutator(tw("n1n4n6n3"), tw("n1")) != T.identity());
}
