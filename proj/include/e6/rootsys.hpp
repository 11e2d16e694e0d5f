#pragma once

#include <array>
#include <string>
#include <vector>

#include "e6/intmat.hpp"

namespace e6 {

// Roots are identified by an id in 0..71: ids 0..35 are the positive roots
// r_1..r_36 in order, id 36 + k is -r_{k+1}.
using RootId = int;
constexpr int kPositive = 36;
constexpr int kRoots = 72;

struct Root {
    Vec6 coords{};
    int index = 0;       // 1..36
    bool negative = false;
};

struct RootPair {
    RootId r, s;
    int sign;
};

class RootSystem {
public:
    RootSystem();

    const Mat6& cartan() const { return cartan_; }
    const Vec6& coords(RootId r) const { return coords_[r]; }
    Root root(RootId r) const;
    int height(RootId r) const;
    static bool is_positive(RootId r) { return r < kPositive; }
    static RootId negate(RootId r) { return r < kPositive ? r + kPositive : r - kPositive; }
    static RootId positive_part(RootId r) { return r < kPositive ? r : r - kPositive; }
    // label, e.g. "r14" or "-r14"
    static std::string label(RootId r);

    // -1 when v is not a root
    RootId find(const Vec6& v) const;
    // -1 when r + s is not a root
    RootId sum(RootId r, RootId s) const { return sum_[r][s]; }
    // symmetric bilinear form (r, s) in the root basis
    i64 pairing(RootId r, RootId s) const;
    i64 pairing(const Vec6& a, const Vec6& b) const;

    // -1, 0, 1 for positive roots r, s
    int compare(RootId r, RootId s) const;

    // matrix of the reflection in root r (0-based id of a positive root);
    // column j is the image of r_j
    Mat6 reflection_matrix(RootId r) const;

    std::vector<RootPair> special_pairs() const;
    std::vector<RootPair> extraspecial_pairs() const;

    // N_{r,s}, zero when r + s is not a root
    int structure_constant(RootId r, RootId s) const { return n_[r][s]; }

private:
    Mat6 cartan_{};
    std::array<Vec6, kRoots> coords_{};
    std::array<std::array<RootId, kRoots>, kRoots> sum_{};
    std::array<std::array<int, kRoots>, kRoots> n_{};
    std::vector<RootId> extraspecial_left_;  // per positive root, -1 for simple roots
};

const RootSystem& build_e6();

}  // namespace e6
