#pragma once

#include <optional>
#include <string>
#include <vector>

#include "e6/modsolve.hpp"
#include "e6/torusnorm.hpp"
#include "e6/weyl.hpp"

namespace e6 {

enum class Mode { SimplyConnected, Adjoint };
std::string to_string(Mode m);

// Lifts N_j of generators x_j in C_W(w) subject to relators over the N_j.
struct SectionProblem {
    TwistData twist;
    std::vector<Elt> generators;
    std::vector<Word> relators;
    Mode mode = Mode::SimplyConnected;
};

// N_j = (H0_j + t_j) L(x_j) with t_j = M B^{-1} y_j in T, B = q A_w - I.
// Each relator is an affine expression c + sum_j K_j t_j; it vanishes (or
// lies in the center, adjoint mode) iff sum_j K_j y_j + B c / M lies in the
// lattice L spanned by the columns of B (and B z / M when z is in T).
// After diagonalising L the conditions become one system over Z/E.
struct SectionSystem {
    i64 modulus = 0;                   // M of the torus model
    std::vector<TorusElement> base;    // H0_j
    std::vector<Vec6> relator_values;  // c for each relator
    std::vector<i64> lattice_factors;  // diagonal of L, entries > 1
    bool center_in_lattice = false;
    ModSystem system;                  // unknowns: 6 per generator
};

struct SectionResult {
    bool solvable = false;
    std::vector<NormalizerElement> witness;  // one lift per generator
    std::vector<i64> certificate;
    SectionSystem system;
};

// evaluates a word over the given normalizer elements
NormalizerElement evaluate(const TorusOps& ops, const Word& w, const std::vector<NormalizerElement>& gens);

SectionSystem build_section_system(const TorusOps& ops, const SectionProblem& p);
SectionResult solve_section(const TorusOps& ops, const SectionProblem& p);
// every relator evaluates to 1 (to a central element in adjoint mode)
bool relators_hold(const TorusOps& ops, const SectionProblem& p, const std::vector<NormalizerElement>& lifts);

struct ClosureCheck {
    bool performed = false;
    std::size_t size = 0;
    bool torus_intersection_trivial = false;
    bool image_is_centralizer = false;
};

// closes <lifts> in N (modulo the center in adjoint mode)
ClosureCheck check_closure(const TorusOps& ops, const TwistData& t, const std::vector<NormalizerElement>& lifts,
                           Mode mode, std::size_t limit);

// exhaustive search over all lift tuples; nullopt when more than
// max_steps relator evaluations would be needed
std::optional<bool> brute_force_section(const TorusOps& ops, const SectionProblem& p, std::size_t max_steps);

// presentation of C_W(w): Coxeter presentation for w = 1, otherwise
// Cayley-graph relators on greedily chosen generators; cached per class
const Presentation& centralizer_presentation(int cls);

// the subgroup and relators of the hand-made non-split arguments; empty
// optional for classes that have none
struct Subsystem {
    std::vector<std::string> generator_words;  // Weyl words
    std::vector<Elt> generators;
    std::vector<Word> relators;
    std::vector<std::string> relator_text;
};
std::optional<Subsystem> obstruction_subsystem(int cls);

struct Decision {
    int cls = 0;
    i64 q = 0;
    Mode mode = Mode::SimplyConnected;
    bool splits = false;
    bool expected = false;
    i64 modulus = 0;
    i64 ambient_k = 0;
    std::size_t generators = 0;
    std::size_t relators = 0;
    std::vector<NormalizerElement> witness;
    std::vector<i64> certificate;
    bool witness_verified = false;
    bool certificate_verified = false;
    ClosureCheck closure;
    // even q: the canonical lifts themselves form a complement
    bool canonical_lifts_split = false;
    // non-split only: the hand-made subsystem is unsolvable too
    std::optional<bool> obstruction_unsolvable;
};

Decision decide_complement(int cls, i64 q, Mode mode, std::size_t closure_limit = 10000000);

struct ObstructionResult {
    int cls = 0;
    i64 q = 0;
    Mode mode = Mode::SimplyConnected;
    bool has_subsystem = false;
    bool solvable = false;
    std::vector<i64> certificate;
    bool certificate_verified = false;
    std::vector<std::string> relator_text;
    std::vector<std::string> generator_words;
};

ObstructionResult obstruction_check(int cls, i64 q, Mode mode);

}  // namespace e6
