#include "e6/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace e6 {

namespace {

// Bourbaki labelling: 1-3-4-5-6 with 2 attached to 4
constexpr int kEdges[5][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};

int height_of(const Vec6& v) {
    i64 h = 0;
    for (i64 x : v) h += x;
    return static_cast<int>(h);
}

// bimultiplicative sign on the root lattice, epsilon(a_i, a_j) = -1 for i = j
// and for adjacent i < j
int epsilon(const Mat6& cartan, const Vec6& a, const Vec6& b) {
    i64 e = 0;
    for (int i = 0; i < 6; ++i) {
        e += a[i] * b[i];
        for (int j = i + 1; j < 6; ++j)
            if (cartan[i][j] == -1) e += a[i] * b[j];
    }
    return (e % 2 == 0) ? 1 : -1;
}

}  // namespace

RootSystem::RootSystem() {
    for (int i = 0; i < 6; ++i) cartan_[i][i] = 2;
    for (auto& e : kEdges) cartan_[e[0]][e[1]] = cartan_[e[1]][e[0]] = -1;

    std::vector<Vec6> pos;
    for (int i = 0; i < 6; ++i) {
        Vec6 v{};
        v[i] = 1;
        pos.push_back(v);
    }
    for (std::size_t k = 0; k < pos.size(); ++k)
        for (int i = 0; i < 6; ++i) {
            Vec6 v = pos[k];
            i64 ip = 0;
            for (int j = 0; j < 6; ++j) ip += v[j] * cartan_[j][i];
            if (ip != -1) continue;
            v[i] += 1;
            if (std::find(pos.begin(), pos.end(), v) == pos.end()) pos.push_back(v);
        }
    if (pos.size() != kPositive) throw std::logic_error("E6 must have 36 positive roots");

    std::sort(pos.begin(), pos.end(), [](const Vec6& a, const Vec6& b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (int k = 0; k < kPositive; ++k) {
        coords_[k] = pos[k];
        for (int j = 0; j < 6; ++j) coords_[k + kPositive][j] = -pos[k][j];
    }

    for (RootId r = 0; r < kRoots; ++r)
        for (RootId s = 0; s < kRoots; ++s) {
            Vec6 v;
            for (int j = 0; j < 6; ++j) v[j] = coords_[r][j] + coords_[s][j];
            sum_[r][s] = find(v);
        }

    // Chevalley basis from the sign cocycle: e_a = E_a, e_{-a} = -E_{-a}
    auto sgn = [](RootId r) { return is_positive(r) ? 1 : -1; };
    std::array<std::array<int, kRoots>, kRoots> n0{};
    for (RootId r = 0; r < kRoots; ++r)
        for (RootId s = 0; s < kRoots; ++s) {
            RootId t = sum_[r][s];
            if (t >= 0) n0[r][s] = sgn(r) * sgn(s) * sgn(t) * epsilon(cartan_, coords_[r], coords_[s]);
        }

    // rescale e_t and e_{-t} so that every extraspecial constant is +1
    std::array<int, kPositive> c{};
    extraspecial_left_.assign(kPositive, -1);
    for (RootId t = 0; t < kPositive; ++t) {
        if (height(t) == 1) {
            c[t] = 1;
            continue;
        }
        for (RootId r = 0; r < t; ++r) {
            RootId s = -1;
            for (RootId x = 0; x < kPositive; ++x)
                if (sum_[r][x] == t) s = x;
            if (s < 0) continue;
            extraspecial_left_[t] = r;
            c[t] = n0[r][s] * c[r] * c[s];
            break;
        }
    }
    for (RootId r = 0; r < kRoots; ++r)
        for (RootId s = 0; s < kRoots; ++s) {
            RootId t = sum_[r][s];
            n_[r][s] = t < 0 ? 0 : n0[r][s] * c[positive_part(r)] * c[positive_part(s)] * c[positive_part(t)];
        }
}

Root RootSystem::root(RootId r) const {
    Root x;
    x.coords = coords_[r];
    x.index = positive_part(r) + 1;
    x.negative = !is_positive(r);
    return x;
}

int RootSystem::height(RootId r) const { return height_of(coords_[r]); }

std::string RootSystem::label(RootId r) {
    return (is_positive(r) ? "r" : "-r") + std::to_string(positive_part(r) + 1);
}

RootId RootSystem::find(const Vec6& v) const {
    for (RootId r = 0; r < kRoots; ++r)
        if (coords_[r] == v) return r;
    return -1;
}

i64 RootSystem::pairing(const Vec6& a, const Vec6& b) const {
    i64 s = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) s += a[i] * cartan_[i][j] * b[j];
    return s;
}

i64 RootSystem::pairing(RootId r, RootId s) const { return pairing(coords_[r], coords_[s]); }

int RootSystem::compare(RootId r, RootId s) const {
    int hr = height(r), hs = height(s);
    if (hr != hs) return hr < hs ? -1 : 1;
    for (int j = 0; j < 6; ++j) {
        i64 d = coords_[s][j] - coords_[r][j];
        if (d) return d < 0 ? -1 : 1;
    }
    return 0;
}

Mat6 RootSystem::reflection_matrix(RootId r) const {
    if (r < 0 || r >= kRoots) throw std::out_of_range("root id");
    Mat6 a = identity6();
    for (int j = 0; j < 6; ++j) {
        Vec6 ej{};
        ej[j] = 1;
        i64 p = pairing(ej, coords_[r]);
        for (int k = 0; k < 6; ++k) a[k][j] -= p * coords_[r][k];
    }
    return a;
}

std::vector<RootPair> RootSystem::special_pairs() const {
    std::vector<RootPair> out;
    for (RootId r = 0; r < kPositive; ++r)
        for (RootId s = 0; s < kPositive; ++s)
            if (compare(r, s) < 0 && sum_[r][s] >= 0) out.push_back({r, s, n_[r][s]});
    return out;
}

std::vector<RootPair> RootSystem::extraspecial_pairs() const {
    std::vector<RootPair> out;
    for (RootId t = 0; t < kPositive; ++t) {
        RootId r = extraspecial_left_[t];
        if (r < 0) continue;
        Vec6 v;
        for (int j = 0; j < 6; ++j) v[j] = coords_[t][j] - coords_[r][j];
        RootId s = find(v);
        out.push_back({r, s, n_[r][s]});
    }
    std::sort(out.begin(), out.end(), [](const RootPair& a, const RootPair& b) {
        return a.r != b.r ? a.r < b.r : a.s < b.s;
    });
    return out;
}

const RootSystem& build_e6() {
    static const RootSystem rs;
    return rs;
}

}  // namespace e6
