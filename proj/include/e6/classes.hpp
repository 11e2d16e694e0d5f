#pragma once

#include <string>
#include <vector>

#include "e6/intmat.hpp"
#include "e6/weyl.hpp"

namespace e6 {

// integer polynomial in q, coefficients low to high
using QPoly = std::vector<i64>;
i64 eval(const QPoly& f, i64 q);

enum class SplitRule { Never, Always, UnlessQ3Mod4 };

struct ClassInfo {
    int index;                       // 1..25
    std::string representative;      // word in reflections, e.g. "w3w2w4w14"
    int order;                       // |w|
    int centralizer_order;           // |C_W(w)|
    std::string centralizer_label;   // kept verbatim, not interpreted
    std::string torus_label;
    std::vector<QPoly> torus_factors;  // product is |T|
    // cyclic factors of T as printed; a single factor raised to a power k
    // counts as k cyclic factors
    std::vector<QPoly> cyclic_factors;
    SplitRule split;
};

const std::vector<ClassInfo>& class_table();
const ClassInfo& class_info(int cls);

// expected complement existence for odd or even q
bool expected_split(int cls, i64 q);
i64 expected_torus_order(int cls, i64 q);
std::vector<i64> expected_cyclic_orders(int cls, i64 q);

Elt class_representative(const WeylGroup& w, int cls);

struct Classification {
    int cls = 0;         // 1..25
    Elt conjugator = 0;  // g with g * rep * g^{-1} = x
};

Classification classify(const WeylGroup& w, Elt x);

}  // namespace e6
