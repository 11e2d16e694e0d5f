#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace e6 {

// reference extraspecial pairs <r, s, sign of N_{r,s}>, root indices 1..36
const std::vector<std::array<int, 3>>& reference_extraspecial();

// A relation among Tits group elements.  Besides the named elements, the
// text may use n1..n36 and h1..h36 (h_k = h_{r_k}(-1)) directly.
struct TitsIdentity {
    int cls = 0;  // 0 when not tied to a torus class
    std::vector<std::pair<std::string, std::string>> names;
    std::string relation;
};

const std::vector<TitsIdentity>& reference_tits_identities();

struct TitsIdentityResult {
    bool holds = false;
    std::string value;  // h-part of lhs * rhs^-1, or "not in H"
};

TitsIdentityResult check_tits_identity(const TitsIdentity& id);

}  // namespace e6
