#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "e6/intmat.hpp"
#include "e6/rootsys.hpp"
#include "e6/weyl.hpp"

namespace e6 {

constexpr int kAdjointDim = 78;

// Chevalley basis of the adjoint representation: index r in 0..71 is e_r,
// index 72 + i is h_i = [e_{r_i}, e_{-r_i}].
class AdjointRep {
public:
    using Sparse = std::vector<std::pair<int, i64>>;

    explicit AdjointRep(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    static int h_index(int i) { return kRoots + i; }

    Sparse bracket(int a, int b) const;
    IntMatrix ad(int a) const;
    // exp(ad e_r) exp(-ad e_{-r}) exp(ad e_r)
    IntMatrix n_matrix(RootId r) const;
    // h_r(-1) acts on e_s by (-1)^{(s, r)}
    IntMatrix h_matrix(RootId r) const;

private:
    const RootSystem& rs_;
};

IntMatrix exp_nilpotent(const IntMatrix& x);

// Element of the Tits group: weyl image w and signs with
// t(e_r) = (-1)^{bit r} e_{w(r)}, t(e_{-r}) = (-1)^{bit r} e_{-w(r)} for r > 0.
struct TitsElement {
    Elt weyl = 0;
    std::uint64_t signs = 0;
    bool operator==(const TitsElement& o) const { return weyl == o.weyl && signs == o.signs; }
    bool operator!=(const TitsElement& o) const { return !(*this == o); }
};

// h-part encoding: bit i set means h_{i+1} = h_{r_{i+1}}(-1) occurs
using HBits = std::uint8_t;

class TitsGroup {
public:
    TitsGroup(const RootSystem& rs, const WeylGroup& w);

    const WeylGroup& weyl() const { return w_; }
    TitsElement identity() const { return {}; }
    TitsElement n(RootId r) const { return n_[r]; }  // n_{-r} = n_r^{-1}
    TitsElement h(HBits bits) const;
    TitsElement h_root(RootId r) const;                // h_r(-1)
    TitsElement mul(const TitsElement& a, const TitsElement& b) const;
    TitsElement inverse(const TitsElement& a) const;
    TitsElement power(const TitsElement& a, i64 k) const;
    TitsElement commutator(const TitsElement& a, const TitsElement& b) const;

    // parse-free word constructors: 1-based positive root indices
    TitsElement n_word(const std::vector<int>& indices) const;

    // the element H of the 2-group with a = H * canonical_lift(weyl(a))
    HBits h_part(const TitsElement& a) const;
    // decomposition of an element with trivial weyl image; throws if the sign
    // pattern is not that of an element of the 2-group
    HBits h_part_solve(std::uint64_t signs) const;
    std::uint64_t h_signs(HBits bits) const { return h_signs_[bits]; }
    HBits h_of_root(RootId r) const;

    TitsElement canonical_lift(Elt x) const { return {x, lift_[x]}; }
    // canonical_lift(x) canonical_lift(y) canonical_lift(xy)^{-1}
    HBits cocycle(Elt x, Elt y) const;

    // sign eta with n_s n_r n_s^{-1} = h_{w_s(r)}(eta) n_{w_s(r)}
    int eta(RootId s, RootId r) const;

    IntMatrix matrix(const TitsElement& a) const;
    TitsElement from_matrix(const IntMatrix& m) const;

private:
    const RootSystem& rs_;
    const WeylGroup& w_;
    std::vector<TitsElement> n_;
    std::vector<std::uint64_t> lift_;
    std::array<std::uint64_t, 64> h_signs_{};
    std::array<HBits, 64> simple_to_bits_{};
};

}  // namespace e6
