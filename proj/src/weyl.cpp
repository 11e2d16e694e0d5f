#include "e6/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "e6/coset_enum.hpp"

namespace e6 {

namespace {

Vec6 two_rho(const RootSystem& rs) {
    Vec6 v{};
    for (RootId r = 0; r < kPositive; ++r)
        for (int j = 0; j < 6; ++j) v[j] += rs.coords(r)[j];
    return v;
}

}  // namespace

std::uint64_t WeylGroup::key_of(const Vec6& v) const {
    std::uint64_t k = 0;
    for (int j = 0; j < 6; ++j) {
        if (v[j] < -63 || v[j] > 63) throw std::logic_error("Weyl key out of range");
        k = (k << 7) | static_cast<std::uint64_t>(v[j] + 64);
    }
    return k;
}

Elt WeylGroup::lookup(const Vec6& v) const {
    auto it = index_.find(key_of(v));
    if (it == index_.end()) throw std::invalid_argument("matrix is not an element of W(E6)");
    return it->second;
}

Vec6 WeylGroup::image_rho(Elt x) const {
    Vec6 v;
    std::uint64_t k = keys_[x];
    for (int j = 5; j >= 0; --j) {
        v[j] = static_cast<i64>(k & 127) - 64;
        k >>= 7;
    }
    return v;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
    const Vec6 rho2 = two_rho(rs);
    std::array<Mat6, 6> gm;
    for (int i = 0; i < 6; ++i) gm[i] = rs.reflection_matrix(i);

    auto store = [&](const Mat6& a, Elt parent, int last, int len) {
        std::array<std::int8_t, 36> m;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m[i * 6 + j] = static_cast<std::int8_t>(a[i][j]);
        Elt id = static_cast<Elt>(mats_.size());
        mats_.push_back(m);
        std::uint64_t k = key_of(e6::mul(a, rho2));
        keys_.push_back(k);
        index_.emplace(k, id);
        parent_.push_back(parent);
        last_.push_back(static_cast<std::int8_t>(last));
        len_.push_back(static_cast<std::uint8_t>(len));
        return id;
    };

    index_.reserve(60000);
    store(identity6(), 0, 0, 0);
    for (Elt x = 0; x < mats_.size(); ++x) {
        const Mat6 ax = matrix(x);
        std::array<Elt, 6> row{};
        for (int i = 0; i < 6; ++i) {
            Mat6 ay = e6::mul(ax, gm[i]);
            auto it = index_.find(key_of(e6::mul(ay, rho2)));
            row[i] = it != index_.end() ? it->second : store(ay, x, i + 1, len_[x] + 1);
        }
        rmul_.push_back(row);
    }
    for (int i = 0; i < 6; ++i) gens_[i] = rmul_[0][i];
    max_len_ = len_.back();

    const std::size_t n = mats_.size();
    lmul_.resize(n);
    for (Elt x = 0; x < n; ++x)
        for (int i = 0; i < 6; ++i) lmul_[x][i] = lookup(e6::mul(gm[i], image_rho(x)));

    inv_.assign(n, 0);
    for (Elt x = 1; x < n; ++x) inv_[x] = lmul_[inv_[parent_[x]]][last_[x] - 1];

    perm_.resize(n);
    for (RootId r = 0; r < kRoots; ++r) perm_[0][r] = static_cast<std::uint8_t>(r);
    std::array<std::array<std::uint8_t, kRoots>, 6> gperm;
    for (int i = 0; i < 6; ++i)
        for (RootId r = 0; r < kRoots; ++r) gperm[i][r] = static_cast<std::uint8_t>(rs.find(e6::mul(gm[i], rs.coords(r))));
    for (Elt x = 1; x < n; ++x)
        for (RootId r = 0; r < kRoots; ++r) perm_[x][r] = perm_[parent_[x]][gperm[last_[x] - 1][r]];

    // conjugacy classes as orbits under conjugation by simple reflections
    class_id_.assign(n, -1);
    conjugator_.assign(n, 0);
    for (Elt x = 0; x < n; ++x) {
        if (class_id_[x] >= 0) continue;
        const int id = static_cast<int>(class_reps_.size());
        class_reps_.push_back(x);
        std::vector<Elt> queue{x};
        class_id_[x] = id;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            Elt y = queue[k];
            for (int i = 1; i <= 6; ++i) {
                Elt z = lmul_gen(i, rmul_gen(y, i));
                if (class_id_[z] >= 0) continue;
                class_id_[z] = id;
                conjugator_[z] = lmul_gen(i, conjugator_[y]);
                queue.push_back(z);
            }
        }
        class_sizes_.push_back(queue.size());
    }
}

Mat6 WeylGroup::matrix(Elt x) const {
    Mat6 a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i][j] = mats_[x][i * 6 + j];
    return a;
}

Elt WeylGroup::from_matrix(const Mat6& a) const {
    Elt x = lookup(e6::mul(a, image_rho(0)));
    if (matrix(x) != a) throw std::invalid_argument("matrix is not an element of W(E6)");
    return x;
}

Elt WeylGroup::mul(Elt x, Elt y) const {
    const auto& m = mats_[x];
    const Vec6 v = image_rho(y);
    Vec6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i] += m[i * 6 + j] * v[j];
    return lookup(r);
}

Elt WeylGroup::power(Elt x, i64 n) const {
    if (n < 0) {
        x = inverse(x);
        n = -n;
    }
    Elt r = identity(), b = x;
    while (n) {
        if (n & 1) r = mul(r, b);
        n >>= 1;
        if (n) b = mul(b, b);
    }
    return r;
}

Elt WeylGroup::reflection(RootId r) const { return from_matrix(rs_.reflection_matrix(r)); }

std::vector<int> WeylGroup::reduced_word(Elt x) const {
    std::vector<int> w;
    while (x != 0) {
        w.push_back(last_[x]);
        x = parent_[x];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Elt WeylGroup::from_root_word(const std::vector<int>& indices) const {
    Elt x = identity();
    for (int k : indices) {
        if (k < 1 || k > kPositive) throw std::out_of_range("root index must be 1..36");
        x = mul(x, reflection(k - 1));
    }
    return x;
}

int WeylGroup::order(Elt x) const {
    int n = 1;
    for (Elt y = x; y != identity(); y = mul(y, x)) ++n;
    return n;
}

std::vector<Elt> WeylGroup::centralizer(Elt x) const {
    std::vector<Elt> c;
    for (Elt y = 0; y < size(); ++y)
        if (mul(x, y) == mul(y, x)) c.push_back(y);
    return c;
}

Elt WeylGroup::conjugator(Elt x, Elt y) const {
    if (class_id(x) != class_id(y)) return static_cast<Elt>(size());
    // y = gy rep gy^-1, x = gx rep gx^-1
    return mul(conjugator_from_rep(y), inverse(conjugator_from_rep(x)));
}

std::vector<Elt> WeylGroup::closure(const std::vector<Elt>& gens) const {
    std::vector<char> seen(size(), 0);
    std::vector<Elt> out{identity()};
    seen[identity()] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (Elt g : gens) {
            Elt z = mul(out[k], g);
            if (!seen[z]) {
                seen[z] = 1;
                out.push_back(z);
            }
        }
    return out;
}

std::vector<Elt> WeylGroup::greedy_generators(const std::vector<Elt>& subgroup) const {
    std::vector<Elt> sorted = subgroup, gens;
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> in(size(), 0);
    in[identity()] = 1;
    for (Elt x : sorted) {
        if (in[x]) continue;
        gens.push_back(x);
        for (Elt y : closure(gens)) in[y] = 1;
    }
    return gens;
}

Elt WeylGroup::evaluate(const Word& w, const std::vector<Elt>& gens) const {
    Elt x = identity();
    for (int l : w) {
        Elt g = gens.at(static_cast<std::size_t>(std::abs(l) - 1));
        x = mul(x, l > 0 ? g : inverse(g));
    }
    return x;
}

Word free_reduce(const Word& w) {
    Word r;
    for (int l : w) {
        if (!r.empty() && r.back() == -l)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& l : r) l = -l;
    return r;
}

std::string word_to_string(const Word& w, const std::string& letters) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int g = std::abs(w[i]);
        if (!letters.empty() && g <= static_cast<int>(letters.size()))
            os << letters[g - 1];
        else
            os << (i ? " " : "") << "g" << g;
        if (w[i] < 0) os << "^-1";
    }
    return os.str();
}

namespace {

Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) w = Word(w.begin() + 1, w.end() - 1);
    return w;
}

// least rotation of w or of its inverse
Word canonical_relator(const Word& w) {
    Word best;
    for (const Word& v : {w, inverse_word(w)})
        for (std::size_t k = 0; k < v.size(); ++k) {
            Word r(v.begin() + static_cast<long>(k), v.end());
            r.insert(r.end(), v.begin(), v.begin() + static_cast<long>(k));
            if (best.empty() || r < best) best = r;
        }
    return best;
}

}  // namespace

Presentation WeylGroup::presentation(const std::vector<Elt>& gens) const {
    Presentation p;
    p.generators = gens;
    const int g = static_cast<int>(gens.size());
    if (g == 0) {
        p.order = 1;
        return p;
    }
    std::vector<Elt> letters_elt;  // letter l stored at index l + g
    letters_elt.resize(2 * g + 1);
    for (int k = 1; k <= g; ++k) {
        letters_elt[g + k] = gens[k - 1];
        letters_elt[g - k] = inverse(gens[k - 1]);
    }

    // Cayley graph BFS tree
    std::vector<Elt> elems{identity()};
    std::vector<int> where(size(), -1), tree_letter{0}, tree_parent{-1};
    where[identity()] = 0;
    std::vector<std::pair<int, int>> non_tree;
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (int l = -g; l <= g; ++l) {
            if (!l) continue;
            Elt z = mul(elems[k], letters_elt[l + g]);
            if (where[z] < 0) {
                where[z] = static_cast<int>(elems.size());
                elems.push_back(z);
                tree_letter.push_back(l);
                tree_parent.push_back(static_cast<int>(k));
            } else {
                non_tree.emplace_back(static_cast<int>(k), l);
            }
        }
    p.order = elems.size();
    auto tree_word = [&](int v) {
        Word w;
        while (v > 0) {
            w.push_back(tree_letter[v]);
            v = tree_parent[v];
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::set<Word> rels;
    for (auto [v, l] : non_tree) {
        Word w = tree_word(v);
        w.push_back(l);
        Word u = inverse_word(tree_word(where[mul(elems[v], letters_elt[l + g])]));
        w.insert(w.end(), u.begin(), u.end());
        w = cyclic_reduce(w);
        if (!w.empty()) rels.insert(canonical_relator(w));
    }
    std::vector<Word> all(rels.begin(), rels.end());
    std::stable_sort(all.begin(), all.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

    const std::size_t cap = 64 * p.order + 4096;
    auto presents = [&](const std::vector<Word>& rs) { return enumerate_cosets(g, rs, cap) == p.order; };
    auto prefix = [&](std::size_t k) { return std::vector<Word>(all.begin(), all.begin() + static_cast<long>(k)); };

    std::size_t hi = std::min<std::size_t>(8, all.size());
    while (!presents(prefix(hi))) {
        if (hi == all.size()) throw std::runtime_error("Schreier relators do not present the subgroup");
        hi = std::min(all.size(), 2 * hi);
    }
    std::size_t lo = hi / 2;  // prefix(lo) insufficient or lo == 0 untested
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (presents(prefix(mid)))
            hi = mid;
        else
            lo = mid;
    }
    std::vector<Word> kept = prefix(hi);
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<Word> trial = kept;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (presents(trial)) kept = std::move(trial);
    }
    p.relators = std::move(kept);
    return p;
}

Presentation WeylGroup::coxeter_presentation() const {
    Presentation p;
    for (int i = 1; i <= 6; ++i) p.generators.push_back(gen(i));
    for (int i = 1; i <= 6; ++i) {
        p.relators.push_back({i, i});
        for (int j = i + 1; j <= 6; ++j) {
            int m = rs_.cartan()[i - 1][j - 1] == -1 ? 3 : 2;
            Word w;
            for (int k = 0; k < m; ++k) {
                w.push_back(i);
                w.push_back(j);
            }
            p.relators.push_back(w);
        }
    }
    p.order = size();
    return p;
}

}  // namespace e6
