#include "e6/liealg.hpp"

#include <stdexcept>

namespace e6 {

AdjointRep::AdjointRep(const RootSystem& rs) : rs_(rs) {}

AdjointRep::Sparse AdjointRep::bracket(int a, int b) const {
    const bool ra = a < kRoots, rb = b < kRoots;
    if (ra && rb) {
        if (b == RootSystem::negate(a)) {
            Sparse out;
            for (int i = 0; i < 6; ++i)
                if (rs_.coords(a)[i]) out.emplace_back(h_index(i), rs_.coords(a)[i]);
            return out;
        }
        RootId t = rs_.sum(a, b);
        if (t < 0) return {};
        return {{t, rs_.structure_constant(a, b)}};
    }
    if (ra) {
        Vec6 ei{};
        ei[b - kRoots] = 1;
        i64 p = rs_.pairing(rs_.coords(a), ei);
        return p ? Sparse{{a, -p}} : Sparse{};
    }
    if (rb) {
        Vec6 ei{};
        ei[a - kRoots] = 1;
        i64 p = rs_.pairing(rs_.coords(b), ei);
        return p ? Sparse{{b, p}} : Sparse{};
    }
    return {};
}

IntMatrix AdjointRep::ad(int a) const {
    IntMatrix m = zeros(kAdjointDim, kAdjointDim);
    for (int j = 0; j < kAdjointDim; ++j)
        for (auto [i, c] : bracket(a, j)) m[i][j] += c;
    return m;
}

IntMatrix exp_nilpotent(const IntMatrix& x) {
    const std::size_t n = x.size();
    IntMatrix sum = identity(n), term = identity(n);
    for (i64 k = 1; k <= static_cast<i64>(n); ++k) {
        term = mul(term, x);
        bool zero = true;
        for (auto& row : term)
            for (auto& v : row) {
                if (v % k) throw std::logic_error("exp of nilpotent matrix is not integral");
                v /= k;
                if (v) zero = false;
            }
        if (zero) return sum;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
    }
    throw std::logic_error("matrix is not nilpotent");
}

IntMatrix AdjointRep::n_matrix(RootId r) const {
    IntMatrix e = exp_nilpotent(ad(r));
    IntMatrix f = ad(RootSystem::negate(r));
    for (auto& row : f)
        for (auto& v : row) v = -v;
    return e6::mul(e6::mul(e, exp_nilpotent(f)), e);
}

IntMatrix AdjointRep::h_matrix(RootId r) const {
    IntMatrix m = identity(kAdjointDim);
    for (RootId s = 0; s < kRoots; ++s)
        if (rs_.pairing(s, r) % 2) m[s][s] = -1;
    return m;
}

TitsGroup::TitsGroup(const RootSystem& rs, const WeylGroup& w) : rs_(rs), w_(w) {
    simple_to_bits_.fill(0xff);
    for (int bits = 0; bits < 64; ++bits) {
        std::uint64_t s = 0;
        for (RootId r = 0; r < kPositive; ++r) {
            i64 par = 0;
            for (int i = 0; i < 6; ++i)
                if (bits >> i & 1) par += rs.pairing(r, i);
            if (par % 2) s |= std::uint64_t{1} << r;
        }
        h_signs_[bits] = s;
        const int pattern = static_cast<int>(s & 63);
        if (simple_to_bits_[pattern] != 0xff) throw std::logic_error("sign map on the 2-group is not injective");
        simple_to_bits_[pattern] = static_cast<HBits>(bits);
    }

    AdjointRep adj(rs);
    n_.resize(kRoots);
    for (RootId r = 0; r < kPositive; ++r) n_[r] = from_matrix(adj.n_matrix(r));
    for (RootId r = 0; r < kPositive; ++r) n_[r + kPositive] = inverse(n_[r]);

    lift_.assign(w.size(), 0);
    for (Elt x = 1; x < w.size(); ++x) {
        TitsElement t = mul(canonical_lift(w.parent(x)), n_[w.last_gen(x) - 1]);
        if (t.weyl != x) throw std::logic_error("canonical lift has the wrong Weyl image");
        lift_[x] = t.signs;
    }
}

TitsElement TitsGroup::h(HBits bits) const { return {w_.identity(), h_signs_[bits & 63]}; }

HBits TitsGroup::h_of_root(RootId r) const {
    HBits b = 0;
    for (int i = 0; i < 6; ++i)
        if (rs_.coords(r)[i] % 2) b |= static_cast<HBits>(1 << i);
    return b;
}

TitsElement TitsGroup::h_root(RootId r) const { return h(h_of_root(r)); }

TitsElement TitsGroup::mul(const TitsElement& a, const TitsElement& b) const {
    TitsElement c;
    c.weyl = w_.mul(a.weyl, b.weyl);
    std::uint64_t s = b.signs;
    for (RootId r = 0; r < kPositive; ++r) {
        RootId t = RootSystem::positive_part(w_.act(b.weyl, r));
        s ^= ((a.signs >> t) & 1) << r;
    }
    c.signs = s;
    return c;
}

TitsElement TitsGroup::inverse(const TitsElement& a) const {
    TitsElement c;
    c.weyl = w_.inverse(a.weyl);
    for (RootId u = 0; u < kPositive; ++u) {
        RootId r = RootSystem::positive_part(w_.act(c.weyl, u));
        c.signs |= ((a.signs >> r) & 1) << u;
    }
    return c;
}

TitsElement TitsGroup::power(const TitsElement& a, i64 k) const {
    TitsElement b = k < 0 ? inverse(a) : a, r = identity();
    if (k < 0) k = -k;
    while (k) {
        if (k & 1) r = mul(r, b);
        k >>= 1;
        if (k) b = mul(b, b);
    }
    return r;
}

TitsElement TitsGroup::commutator(const TitsElement& a, const TitsElement& b) const {
    return mul(mul(a, b), mul(inverse(a), inverse(b)));
}

TitsElement TitsGroup::n_word(const std::vector<int>& indices) const {
    TitsElement t = identity();
    for (int k : indices) {
        if (k < 1 || k > kPositive) throw std::out_of_range("root index must be 1..36");
        t = mul(t, n_[k - 1]);
    }
    return t;
}

HBits TitsGroup::h_part_solve(std::uint64_t signs) const {
    HBits bits = simple_to_bits_[signs & 63];
    if (h_signs_[bits] != signs) throw std::domain_error("sign pattern is not that of an element of the 2-group");
    return bits;
}

HBits TitsGroup::h_part(const TitsElement& a) const {
    TitsElement d = mul(a, inverse(canonical_lift(a.weyl)));
    return h_part_solve(d.signs);
}

HBits TitsGroup::cocycle(Elt x, Elt y) const { return h_part(mul(canonical_lift(x), canonical_lift(y))); }

int TitsGroup::eta(RootId s, RootId r) const {
    TitsElement a = mul(mul(n_[s], n_[r]), inverse(n_[s]));
    RootId t = w_.act(w_.reflection(RootSystem::positive_part(s)), r);
    TitsElement b = n_[t];
    if (a == b) return 1;
    if (mul(h_root(t), b) == a) return -1;
    throw std::logic_error("conjugate of n_r is not +-n_{w(r)}");
}

IntMatrix TitsGroup::matrix(const TitsElement& a) const {
    IntMatrix m = zeros(kAdjointDim, kAdjointDim);
    for (RootId r = 0; r < kPositive; ++r) {
        const i64 sg = (a.signs >> r & 1) ? -1 : 1;
        RootId t = w_.act(a.weyl, r);
        m[t][r] = sg;
        m[RootSystem::negate(t)][RootSystem::negate(r)] = sg;
    }
    const Mat6 am = w_.matrix(a.weyl);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m[kRoots + i][kRoots + j] = am[i][j];
    return m;
}

TitsElement TitsGroup::from_matrix(const IntMatrix& m) const {
    if (m.size() != kAdjointDim) throw std::invalid_argument("expected a 78x78 matrix");
    Mat6 a{};
    for (int j = 0; j < 6; ++j) {
        int row = -1;
        for (int i = 0; i < kAdjointDim; ++i)
            if (m[i][j]) {
                if (row >= 0 || i >= kRoots) throw std::domain_error("matrix does not permute root spaces");
                row = i;
            }
        if (row < 0) throw std::domain_error("matrix is singular on root spaces");
        for (int k = 0; k < 6; ++k) a[k][j] = rs_.coords(row)[k];
    }
    TitsElement t;
    t.weyl = w_.from_matrix(a);
    for (RootId r = 0; r < kRoots; ++r) {
        RootId img = w_.act(t.weyl, r);
        for (int i = 0; i < kAdjointDim; ++i) {
            i64 v = m[i][r];
            if (i == img) {
                if (v != 1 && v != -1) throw std::domain_error("root space image is not +-e");
                if (r < kPositive && v < 0) t.signs |= std::uint64_t{1} << r;
                if (r >= kPositive && ((t.signs >> (r - kPositive) & 1) != (v < 0 ? 1u : 0u)))
                    throw std::domain_error("signs on e_r and e_{-r} differ");
            } else if (v) {
                throw std::domain_error("matrix does not permute root spaces");
            }
        }
    }
    for (int i = 0; i < kAdjointDim; ++i)
        for (int j = 0; j < 6; ++j) {
            i64 expect = i >= kRoots ? a[i - kRoots][j] : 0;
            if (m[i][kRoots + j] != expect) throw std::domain_error("Cartan block is not the Weyl action");
        }
    return t;
}

}  // namespace e6
