#pragma once

#include <optional>
#include <vector>

#include "e6/intmat.hpp"

namespace e6 {

// A y = b over Z/m.  Rows with a smaller natural modulus d | m are expected
// to be scaled by m/d by the caller.
struct ModSystem {
    i64 modulus = 1;
    IntMatrix a;  // rows x unknowns
    std::vector<i64> b;
    std::size_t unknowns = 0;
};

struct ModSolution {
    bool solvable = false;
    std::vector<i64> y;          // a solution mod m (free variables set to 0)
    std::vector<i64> certificate;  // chi with chi*A = 0 and chi*b != 0 mod m
};

ModSolution solve_mod(const ModSystem& sys);

// independent checks, used by tests and reports
bool check_solution(const ModSystem& sys, const std::vector<i64>& y);
bool check_certificate(const ModSystem& sys, const std::vector<i64>& chi);

}  // namespace e6
