#include "e6/intmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace e6 {

Mat6 identity6() {
    Mat6 r{};
    for (int i = 0; i < 6; ++i) r[i][i] = 1;
    return r;
}

Mat6 mul(const Mat6& a, const Mat6& b) {
    Mat6 r{};
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) {
            i64 x = a[i][k];
            if (!x) continue;
            for (int j = 0; j < 6; ++j) r[i][j] = checked_add(r[i][j], checked_mul(x, b[k][j]));
        }
    return r;
}

Vec6 mul(const Mat6& a, const Vec6& v) {
    Vec6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i] = checked_add(r[i], checked_mul(a[i][j], v[j]));
    return r;
}

Mat6 add(const Mat6& a, const Mat6& b) {
    Mat6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = checked_add(a[i][j], b[i][j]);
    return r;
}

Mat6 sub(const Mat6& a, const Mat6& b) { return add(a, scale(b, -1)); }

Mat6 scale(const Mat6& a, i64 s) {
    Mat6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = checked_mul(a[i][j], s);
    return r;
}

Mat6 pow(const Mat6& a, unsigned n) {
    Mat6 r = identity6(), b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        n >>= 1;
        if (n) b = mul(b, b);
    }
    return r;
}

Mat6 transpose(const Mat6& a) {
    Mat6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = a[j][i];
    return r;
}

namespace {

// Bareiss fraction-free elimination on an n x n block
i64 bareiss(std::vector<std::vector<__int128>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    __int128 d = m[n - 1][n - 1] * sign;
    if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant overflow");
    return static_cast<i64>(d);
}

}  // namespace

i64 det(const Mat6& a) {
    std::vector<std::vector<__int128>> m(6, std::vector<__int128>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m[i][j] = a[i][j];
    return bareiss(std::move(m));
}

Mat6 adjugate(const Mat6& a) {
    Mat6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::vector<std::vector<__int128>> m;
            for (int x = 0; x < 6; ++x) {
                if (x == j) continue;
                std::vector<__int128> row;
                for (int y = 0; y < 6; ++y)
                    if (y != i) row.push_back(a[x][y]);
                m.push_back(std::move(row));
            }
            i64 c = bareiss(std::move(m));
            r[i][j] = ((i + j) % 2) ? -c : c;
        }
    return r;
}

std::string to_string(const Mat6& a) {
    std::ostringstream os;
    for (int i = 0; i < 6; ++i) {
        os << (i ? "\n" : "") << "(";
        for (int j = 0; j < 6; ++j) os << (j ? "," : "") << a[i][j];
        os << ")";
    }
    return os.str();
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow (add)");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow (mul)");
    return r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

i64 powmod(i64 a, std::uint64_t e, i64 m) {
    i64 r = 1 % m, b = mod(a, m);
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return r;
}

i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b) {
        i64 qt = a / b;
        i64 t = a - qt * b;
        a = b;
        b = t;
        t = x0 - qt * x1;
        x0 = x1;
        x1 = t;
        t = y0 - qt * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

i64 inv_mod(i64 a, i64 m) {
    i64 x, y;
    if (ext_gcd(mod(a, m), m, x, y) != 1) throw std::domain_error("not invertible modulo m");
    return mod(x, m);
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> f;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

i64 mult_order(i64 a, i64 m) {
    if (m == 1) return 1;
    if (gcd(a, m) != 1) throw std::domain_error("mult_order: not a unit");
    // order divides phi(m)
    i64 phi = m;
    for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
    i64 ord = phi;
    for (auto [p, e] : factorize(phi))
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    return ord;
}

IntMatrix zeros(std::size_t rows, std::size_t cols) { return IntMatrix(rows, std::vector<i64>(cols, 0)); }

IntMatrix identity(std::size_t n) {
    IntMatrix r = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    if (a[0].size() != k) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            i64 x = a[i][t];
            if (!x) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] = checked_add(r[i][j], checked_mul(x, b[t][j]));
        }
    return r;
}

IntMatrix from_mat6(const Mat6& a) {
    IntMatrix r = zeros(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] = a[i][j];
    return r;
}

namespace {

struct SmithWork {
    IntMatrix a, u, uinv, v;
    std::size_t rows, cols;
    bool track = true;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (!track) return;
        std::swap(u[i], u[j]);
        for (auto& row : uinv) std::swap(row[i], row[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        if (track)
            for (auto& row : v) std::swap(row[i], row[j]);
    }
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, i64 c) {
        if (!c) return;
        for (std::size_t k = 0; k < cols; ++k) a[i][k] = checked_add(a[i][k], checked_mul(c, a[j][k]));
        if (!track) return;
        for (std::size_t k = 0; k < rows; ++k) u[i][k] = checked_add(u[i][k], checked_mul(c, u[j][k]));
        for (std::size_t k = 0; k < rows; ++k) uinv[k][j] = checked_add(uinv[k][j], checked_mul(-c, uinv[k][i]));
    }
    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, i64 c) {
        if (!c) return;
        for (std::size_t k = 0; k < rows; ++k) a[k][i] = checked_add(a[k][i], checked_mul(c, a[k][j]));
        if (!track) return;
        for (std::size_t k = 0; k < cols; ++k) v[k][i] = checked_add(v[k][i], checked_mul(c, v[k][j]));
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        if (!track) return;
        for (auto& x : u[i]) x = -x;
        for (auto& row : uinv) row[i] = -row[i];
    }
};

}  // namespace

namespace {

SmithForm smith_impl(const IntMatrix& input, bool track) {
    SmithWork w;
    w.track = track;
    w.a = input;
    w.rows = input.size();
    w.cols = w.rows ? input[0].size() : 0;
    w.u = identity(w.rows);
    w.uinv = identity(w.rows);
    w.v = identity(w.cols);

    std::size_t t = 0;
    const std::size_t lim = std::min(w.rows, w.cols);
    for (; t < lim; ++t) {
        for (;;) {
            // smallest nonzero entry of the remaining block
            std::size_t pi = w.rows, pj = w.cols;
            i64 best = 0;
            for (std::size_t i = t; i < w.rows; ++i)
                for (std::size_t j = t; j < w.cols; ++j) {
                    i64 x = w.a[i][j] < 0 ? -w.a[i][j] : w.a[i][j];
                    if (x && (!best || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (!best) goto done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < w.rows; ++i) {
                w.add_row(i, t, -(w.a[i][t] / w.a[t][t]));
                if (w.a[i][t]) clean = false;
            }
            for (std::size_t j = t + 1; j < w.cols; ++j) {
                w.add_col(j, t, -(w.a[t][j] / w.a[t][t]));
                if (w.a[t][j]) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold an offending row into the pivot row
            std::size_t bad = w.rows;
            for (std::size_t i = t + 1; i < w.rows && bad == w.rows; ++i)
                for (std::size_t j = t + 1; j < w.cols; ++j)
                    if (w.a[i][j] % w.a[t][t]) {
                        bad = i;
                        break;
                    }
            if (bad == w.rows) break;
            w.add_row(t, bad, 1);
        }
        if (w.a[t][t] < 0) w.negate_row(t);
    }
done:
    SmithForm s;
    s.rank = t;
    s.d.assign(lim, 0);
    for (std::size_t i = 0; i < t; ++i) s.d[i] = w.a[i][i];
    s.u = std::move(w.u);
    s.uinv = std::move(w.uinv);
    s.v = std::move(w.v);
    return s;
}

}  // namespace

SmithForm smith_form(const IntMatrix& a) { return smith_impl(a, true); }

std::vector<i64> invariant_factors(const Mat6& a) {
    SmithForm s = smith_impl(from_mat6(a), false);
    std::vector<i64> r;
    for (i64 d : s.d)
        if (d != 1) r.push_back(d);
    return r;
}

std::vector<i64> abelian_invariants(const std::vector<i64>& orders) {
    // prime -> exponents of the elementary divisors
    std::map<i64, std::vector<int>> parts;
    for (i64 n : orders)
        for (auto [p, e] : factorize(n)) parts[p].push_back(e);
    std::size_t len = 0;
    for (auto& [p, es] : parts) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        len = std::max(len, es.size());
    }
    std::vector<i64> d(len, 1);
    // largest invariant factor collects the largest prime powers
    for (auto& [p, es] : parts)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (int k = 0; k < es[i]; ++k) d[len - 1 - i] = checked_mul(d[len - 1 - i], p);
    return d;
}

}  // namespace e6
