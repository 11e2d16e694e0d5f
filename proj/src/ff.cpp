#include "e6/ff.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace e6 {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(i64 q, int& p, int& e) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    p = static_cast<int>(f[0].first);
    e = f[0].second;
    return true;
}

namespace {

using Poly = std::vector<int>;  // low to high, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
    trim(a);
    const int df = static_cast<int>(f.size()) - 1;
    const int lead_inv = static_cast<int>(inv_mod(f.back(), p));
    while (static_cast<int>(a.size()) - 1 >= df) {
        int shift = static_cast<int>(a.size()) - 1 - df;
        int c = static_cast<int>(mulmod(a.back(), lead_inv, p));
        for (int j = 0; j <= df; ++j) a[shift + j] = static_cast<int>(mod(a[shift + j] - c * f[j], p));
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(r, f, p);
}

Poly poly_powmod(Poly a, i64 e, const Poly& f, int p) {
    Poly r = poly_mod({1}, f, p);
    a = poly_mod(a, f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, f, p);
        e >>= 1;
        if (e) a = poly_mulmod(a, a, f, p);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    // frob[d] = x^{p^d} mod f
    std::vector<Poly> frob{poly_mod({0, 1}, f, p)};
    for (int d = 1; d <= n; ++d) frob.push_back(poly_powmod(frob.back(), p, f, p));
    auto minus_x = [&](Poly a) {
        a.resize(std::max<std::size_t>(a.size(), 2), 0);
        a[1] = static_cast<int>(mod(a[1] - 1, p));
        trim(a);
        return a;
    };
    if (!minus_x(frob[n]).empty()) return false;
    for (auto [r, e] : factorize(n)) {
        Poly g = poly_gcd(minus_x(frob[n / r]), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldCtx::FieldCtx(int p, int e, int k, std::uint64_t max_size) : p_(p), e_(e), k_(k), n_(e * k) {
    if (!is_prime(p) || p > 255) throw std::invalid_argument("field characteristic must be a prime below 256");
    if (e < 1 || k < 1 || n_ > kMaxFieldDegree) throw std::invalid_argument("bad extension degree");
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;
    size_ = 1;
    for (int i = 0; i < n_; ++i) {
        size_ *= static_cast<std::uint64_t>(p);
        if (size_ > max_size) throw std::invalid_argument("field too large for table discrete logarithms");
    }

    // sparse candidates first, then all monic polynomials in index order
    auto try_mod = [&](const Poly& f) {
        if (f[0] != 0 || n_ == 1) {
            if (is_irreducible(f, p)) {
                modulus_ = f;
                return true;
            }
        }
        return false;
    };
    bool found = false;
    if (n_ == 1) {
        found = try_mod({0, 1});
    }
    for (int j = 1; j < n_ && !found; ++j)
        for (int a = (j == 1 ? 0 : 1); a < p && !found; ++a)
            for (int b = 1; b < p && !found; ++b) {
                Poly f(n_ + 1, 0);
                f[n_] = 1;
                f[j] = a;
                f[0] = b;
                found = try_mod(f);
            }
    for (std::uint64_t idx = 1; !found && idx < size_; ++idx) {
        Poly f(n_ + 1, 0);
        f[n_] = 1;
        std::uint64_t t = idx;
        for (int i = 0; i < n_; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        found = try_mod(f);
    }
    if (!found) throw std::runtime_error("no irreducible polynomial found");

    const i64 order = group_order();
    const auto primes = factorize(order);
    for (std::uint64_t idx = 1; idx < size_; ++idx) {
        FieldElement g = from_index(idx);
        bool primitive = true;
        for (auto [r, ex] : primes)
            if (pow(g, order / r) == one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen_ = g;
            break;
        }
    }

    baby_m_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
    if (baby_m_ == 0) baby_m_ = 1;
    baby_.reserve(baby_m_ * 2);
    FieldElement x = one();
    for (std::uint64_t j = 0; j < baby_m_; ++j) {
        baby_.emplace(index(x), static_cast<std::uint32_t>(j));
        x = mul(x, gen_);
    }
    giant_ = pow(gen_, -static_cast<i64>(baby_m_));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(i64 a) const {
    FieldElement x;
    x.c[0] = static_cast<std::uint8_t>(mod(a, p_));
    return x;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % p_);
    return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint8_t>((p_ - a.c[i]) % p_);
    return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    std::array<int, 2 * kMaxFieldDegree> t{};
    for (int i = 0; i < n_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < n_; ++j) t[i + j] = (t[i + j] + a.c[i] * b.c[j]) % p_;
    }
    for (int i = 2 * n_ - 2; i >= n_; --i) {
        int c = t[i] % p_;
        if (!c) continue;
        for (int j = 0; j < n_; ++j) t[i - n_ + j] = (t[i - n_ + j] + (p_ - c) * modulus_[j]) % p_;
        t[i] = 0;
    }
    FieldElement r;
    for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint8_t>(t[i] % p_);
    return r;
}

FieldElement FieldCtx::pow(const FieldElement& a, i64 e) const {
    if (is_zero(a)) {
        if (e <= 0) throw std::domain_error("zero to a nonpositive power");
        return a;
    }
    std::uint64_t ex = static_cast<std::uint64_t>(mod(e, group_order()));
    FieldElement r = one(), b = a;
    while (ex) {
        if (ex & 1) r = mul(r, b);
        ex >>= 1;
        if (ex) b = mul(b, b);
    }
    return r;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("zero has no inverse");
    return pow(a, -1);
}

std::uint64_t FieldCtx::index(const FieldElement& a) const {
    std::uint64_t r = 0;
    for (int i = n_ - 1; i >= 0; --i) r = r * p_ + a.c[i];
    return r;
}

FieldElement FieldCtx::from_index(std::uint64_t idx) const {
    FieldElement r;
    for (int i = 0; i < n_; ++i) {
        r.c[i] = static_cast<std::uint8_t>(idx % p_);
        idx /= p_;
    }
    return r;
}

i64 FieldCtx::dlog(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("dlog of zero");
    FieldElement y = a;
    for (std::uint64_t i = 0; i <= baby_m_; ++i) {
        auto it = baby_.find(index(y));
        if (it != baby_.end()) return static_cast<i64>((i * baby_m_ + it->second) % static_cast<std::uint64_t>(group_order()));
        y = mul(y, giant_);
    }
    throw std::logic_error("dlog failed; generator is not primitive");
}

i64 FieldCtx::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("zero has no multiplicative order");
    i64 ord = group_order();
    for (auto [r, e] : factorize(ord))
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    return ord;
}

i64 FieldCtx::root_exponent(const RootSpec& spec) const {
    const i64 n = group_order();
    const i64 half = p_ == 2 ? 0 : n / 2;  // exponent of -1
    if (spec.order < 0 || spec.power_t < 0) throw std::invalid_argument("negative root specification");
    if (spec.order && n % spec.order) throw std::domain_error("no element of order " + std::to_string(spec.order));
    if (!spec.power_t) return spec.order ? (n / spec.order) % n : 0;
    const i64 t = spec.power_t;
    if (!spec.order) {
        if (half && n % (2 * t) == 0) return n / (2 * t);
        i64 g = gcd(t, n);
        if (half % g) throw std::domain_error("x^" + std::to_string(t) + " = -1 has no solution");
        return mulmod(half / g, inv_mod((t / g) % (n / g), n / g), n / g);
    }
    const i64 m = spec.order, base = n / m;
    for (i64 u = 1; u <= m; ++u) {
        if (gcd(u, m) != 1) continue;
        if (mulmod(mulmod(base, u, n), t, n) == half) return mulmod(base, u, n);
    }
    throw std::domain_error("no element of order " + std::to_string(m) + " with x^" + std::to_string(t) + " = -1");
}

FieldElement FieldCtx::root_with_property(const RootSpec& spec) const { return gen_pow(root_exponent(spec)); }

std::string FieldCtx::to_string(const FieldElement& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = n_ - 1; i >= 0; --i) {
        if (!a.c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a.c[i] != 1) os << int(a.c[i]);
        if (i >= 1) os << "x";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace e6
