#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "e6/context.hpp"
#include "e6/ff.hpp"
#include "e6/intmat.hpp"

namespace e6 {

// Elements of the maximal torus are H = prod h_{r_i}(lambda_i).  Every
// lambda_i used by one computation lies in the cyclic group mu_M of M-th
// roots of unity in the algebraic closure of F_p (gcd(M, p) = 1), and is
// stored as an exponent: lambda_i = g^{e_i} for a fixed generator g of mu_M.
// The Frobenius lambda -> lambda^q becomes e -> q e mod M.  When M = q^k - 1
// the model is F_{q^k}^* and can be tied to an explicit FieldCtx.
class TorusModel {
public:
    TorusModel(i64 q, i64 modulus);
    static TorusModel from_field(const FieldCtx& f);

    i64 q() const { return q_; }
    int p() const { return p_; }
    i64 modulus() const { return m_; }
    bool odd() const { return p_ != 2; }
    // exponent of -1 (0 in characteristic 2)
    i64 minus_one() const { return odd() ? m_ / 2 : 0; }
    // least k with mu_M inside F_{q^k}
    i64 ambient_k() const;
    const FieldCtx* field() const { return field_; }

    // exponent of an element of exact order n (n | M), i.e. M/n
    i64 root_of_order(i64 n) const;

private:
    i64 q_, m_;
    int p_ = 0;
    const FieldCtx* field_ = nullptr;
};

struct TorusElement {
    Vec6 e{};  // exponents mod M
    bool operator==(const TorusElement& o) const { return e == o.e; }
    bool operator!=(const TorusElement& o) const { return e != o.e; }
};

// normal form h * canonical_lift(x)
struct NormalizerElement {
    TorusElement h;
    Elt x = 0;
    bool operator==(const NormalizerElement& o) const { return h == o.h && x == o.x; }
    bool operator!=(const NormalizerElement& o) const { return !(*this == o); }
};

// class representative w, its n-word and the Frobenius data
struct TwistData {
    int cls = 0;
    Elt w = 0;
    TitsElement n;
    i64 q = 0;
};

TwistData make_twist(int cls, i64 q);

struct TorusStructure {
    i64 order = 0;
    std::vector<i64> invariant_factors;  // entries > 1, d1 | d2 | ...
    std::vector<TorusElement> generators;  // generator i has order invariant_factors[i]
    i64 ambient_k = 0;
    i64 modulus = 0;  // M of the model the generators live in
};

class TorusOps {
public:
    explicit TorusOps(const TorusModel& model, const Context& ctx = context());

    const TorusModel& model() const { return model_; }
    const Context& ctx() const { return ctx_; }

    TorusElement one() const { return {}; }
    TorusElement reduce(const Vec6& v) const;
    TorusElement mul(const TorusElement& a, const TorusElement& b) const;
    TorusElement inv(const TorusElement& a) const;
    TorusElement pow(const TorusElement& a, i64 k) const;
    // H^n = n H n^{-1} for any lift n of w
    TorusElement act(Elt w, const TorusElement& h) const;
    TorusElement act_matrix(const Mat6& a, const TorusElement& h) const;
    TorusElement sigma(const TorusElement& h) const;
    TorusElement from_hbits(HBits bits) const;
    // (lambda_1..lambda_6) from explicit field elements; needs a field model
    TorusElement from_field(const std::array<FieldElement, 6>& lambdas) const;
    std::array<FieldElement, 6> to_field(const TorusElement& h) const;

    NormalizerElement identity() const { return {}; }
    NormalizerElement from_tits(const TitsElement& t) const;
    NormalizerElement make(const TorusElement& h, const TitsElement& t) const;
    NormalizerElement multiply(const NormalizerElement& a, const NormalizerElement& b) const;
    NormalizerElement inverse(const NormalizerElement& a) const;
    NormalizerElement power(const NormalizerElement& a, i64 m) const;
    // (H u)^m = (sum_{k<m} A^k H) u^m for a Tits element u
    NormalizerElement power_by_sum(const TorusElement& h, const TitsElement& u, i64 m) const;
    NormalizerElement commutator(const NormalizerElement& a, const NormalizerElement& b) const;
    // x g x^{-1}
    NormalizerElement conjugate(const NormalizerElement& g, const NormalizerElement& x) const;
    // Frobenius on normal forms; the canonical lifts have integer entries
    NormalizerElement sigma(const NormalizerElement& g) const;

    // H^{sigma n} = H, i.e. (q A_w - I) H = 0
    bool in_torus(const TorusElement& h, const TwistData& t) const;
    // g^{sigma n} = g with x^{sigma n} = sigma(n x n^{-1})
    bool in_normalizer(const NormalizerElement& g, const TwistData& t) const;
    // membership of H u for a Tits word u with weyl(u) in C_W(w); throws otherwise
    bool normalizer_membership(const TorusElement& h, const TitsElement& u, const TwistData& t) const;

    // some H with H * canonical_lift(x) in N; nullopt if mu_M is too small
    std::optional<TorusElement> coset_particular_solution(Elt x, const TwistData& t) const;

    // z = h_1(xi) h_3(xi^2) h_5(xi) h_6(xi^2), xi of order 3; needs 3 | M
    TorusElement center_element() const;
    bool is_central(const TorusElement& h) const;
    bool adjoint_equal(const TorusElement& a, const TorusElement& b) const;

private:
    const TorusModel model_;
    const Context& ctx_;
};

// q A_w - I
Mat6 twisted_matrix(const WeylGroup& w, Elt x, i64 q);
i64 torus_order(int cls, i64 q);
// structure inside mu_M with M = q^k - 1 for the least suitable k
TorusStructure torus_structure(int cls, i64 q);
TorusStructure torus_structure_in(const TorusModel& model, Elt w);
// all elements of T (throws above the limit)
std::vector<TorusElement> enumerate_torus(const TorusModel& model, const TorusStructure& s, std::size_t limit = 1000000);

// smallest M for which every computation on class w at q stays inside mu_M:
// the exponent of T times 2 (q odd) times 3 (center needed, 3 does not divide q)
i64 decision_modulus(const WeylGroup& weyl, Elt w, i64 q, bool with_center);

std::string to_string(const TorusElement& h);

}  // namespace e6
