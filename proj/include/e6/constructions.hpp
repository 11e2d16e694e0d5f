#pragma once

#include <string>
#include <vector>

#include "e6/split.hpp"

namespace e6 {

struct NamedCheck {
    std::string name;
    bool ok = false;
};

// Explicit lifts and complements built from closed-form torus elements over
// F_{q^k}, k least such that every required root of unity exists.
struct ConstructionReport {
    int cls = 0;
    i64 q = 0;
    bool applicable = true;
    std::string reason;  // set when not applicable
    i64 field_k = 0;
    i64 modulus = 0;  // q^k - 1
    std::vector<std::string> elements;
    std::vector<NamedCheck> checks;
    int weyl_order = 0;     // |w| (lift) or |C_W(w)| (complement)
    i64 element_order = 0;  // lift only
    bool closure_in_range = false;
    ClosureCheck closure;
    bool ok = false;
};

// lift of the class representative with the same order as w
// both throw std::domain_error when the field would exceed max_field_size
ConstructionReport verify_lift(int cls, i64 q, std::uint64_t max_field_size = std::uint64_t{1} << 32);
// the complement generators for split classes; not applicable otherwise
ConstructionReport verify_complement(int cls, i64 q, std::size_t closure_limit = 10000000,
                                     std::uint64_t max_field_size = std::uint64_t{1} << 32);

// relation text over named elements: juxtaposition, x^k, x^y = y^-1 x y,
// [x,y] = x y x^-1 y^-1, 1 for the identity, parentheses and one optional "=";
// returns the word lhs * rhs^-1 over the indices 1..names.size()
Word parse_relation(const std::string& text, const std::vector<std::string>& names);

}  // namespace e6
