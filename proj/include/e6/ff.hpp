#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "e6/intmat.hpp"

namespace e6 {

constexpr int kMaxFieldDegree = 32;

// polynomial coordinates over F_p, lowest degree first
struct FieldElement {
    std::array<std::uint8_t, kMaxFieldDegree> c{};
    bool operator==(const FieldElement& o) const { return c == o.c; }
    bool operator!=(const FieldElement& o) const { return c != o.c; }
};

// What root_with_property should produce: an element of exact order `order`
// (if nonzero) with x^power_t = -1 (if power_t nonzero).
struct RootSpec {
    i64 order = 0;
    i64 power_t = 0;
};

// F_{q^k} with q = p^e, realized as F_p[x]/(f) with deg f = e*k.
class FieldCtx {
public:
    // throws when p^(e k) exceeds max_size or p is not a prime below 256
    FieldCtx(int p, int e, int k, std::uint64_t max_size = std::uint64_t{1} << 32);

    int p() const { return p_; }
    int e() const { return e_; }
    int k() const { return k_; }
    int degree() const { return n_; }
    i64 q() const { return q_; }
    std::uint64_t size() const { return size_; }
    i64 group_order() const { return static_cast<i64>(size_ - 1); }
    const std::vector<int>& modulus() const { return modulus_; }
    const FieldElement& generator() const { return gen_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const;
    FieldElement from_int(i64 a) const;
    FieldElement minus_one() const { return from_int(-1); }
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, i64 e) const;  // e < 0 allowed for a != 0
    FieldElement inv(const FieldElement& a) const;
    FieldElement frobenius(const FieldElement& a) const { return pow(a, q_); }
    bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }

    // base-p packing, a bijection with 0..size-1
    std::uint64_t index(const FieldElement& a) const;
    FieldElement from_index(std::uint64_t i) const;
    FieldElement gen_pow(i64 e) const { return pow(gen_, e); }

    // g^dlog(x) = x; baby-step giant-step
    i64 dlog(const FieldElement& a) const;
    i64 element_order(const FieldElement& a) const;
    // deterministic; throws std::domain_error when no solution exists here
    FieldElement root_with_property(const RootSpec& spec) const;
    // exponent of the solution above
    i64 root_exponent(const RootSpec& spec) const;

    std::string to_string(const FieldElement& a) const;

private:
    int p_, e_, k_, n_;
    i64 q_;
    std::uint64_t size_;
    std::vector<int> modulus_;  // monic, degree n
    FieldElement gen_;
    std::uint64_t baby_m_ = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> baby_;
    FieldElement giant_;  // g^{-m}
};

bool is_prime(i64 n);
// q = p^e with p prime; returns false otherwise
bool prime_power(i64 q, int& p, int& e);
// irreducibility over F_p of a monic polynomial (coefficients low to high)
bool is_irreducible(const std::vector<int>& f, int p);

}  // namespace e6
