#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace e6 {

using i64 = std::int64_t;
using Vec6 = std::array<i64, 6>;
using Mat6 = std::array<std::array<i64, 6>, 6>;

Mat6 identity6();
Mat6 mul(const Mat6& a, const Mat6& b);
Vec6 mul(const Mat6& a, const Vec6& v);
Mat6 add(const Mat6& a, const Mat6& b);
Mat6 sub(const Mat6& a, const Mat6& b);
Mat6 scale(const Mat6& a, i64 s);
Mat6 pow(const Mat6& a, unsigned n);
Mat6 transpose(const Mat6& a);
i64 det(const Mat6& a);
// adj(a) * a = det(a) * I
Mat6 adjugate(const Mat6& a);
std::string to_string(const Mat6& a);

// overflow-checked helpers; throw std::overflow_error
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, std::uint64_t e, i64 m);
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
// returns g = gcd(a,b) and x, y with a*x + b*y = g
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);
// inverse of a modulo m; throws if not a unit
i64 inv_mod(i64 a, i64 m);
std::vector<std::pair<i64, int>> factorize(i64 n);
// multiplicative order of a modulo m (gcd(a,m) = 1)
i64 mult_order(i64 a, i64 m);

using IntMatrix = std::vector<std::vector<i64>>;

IntMatrix zeros(std::size_t rows, std::size_t cols);
IntMatrix identity(std::size_t n);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix from_mat6(const Mat6& a);

struct SmithForm {
    // u * a * v = diag(d), with u, v unimodular and uinv = u^{-1}
    std::vector<i64> d;
    IntMatrix u, uinv, v;
    std::size_t rank = 0;
};

// diagonal entries are nonnegative and d[i] | d[i+1] for the nonzero ones
SmithForm smith_form(const IntMatrix& a);

// invariant factors different from 1, in increasing divisibility order
std::vector<i64> invariant_factors(const Mat6& a);

// invariant factors d1 | d2 | ... of a direct product of cyclic groups
std::vector<i64> abelian_invariants(const std::vector<i64>& cyclic_orders);

}  // namespace e6
