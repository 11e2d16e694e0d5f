#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "e6/rootsys.hpp"

namespace e6 {

using Elt = std::uint32_t;

// A letter is +k for generator k (1-based) and -k for its inverse.
using Word = std::vector<int>;

struct Presentation {
    std::vector<Elt> generators;
    std::vector<Word> relators;
    std::size_t order = 0;  // |<generators>|, confirmed by coset enumeration
};

// W(E6) enumerated explicitly.  An element is stored as the matrix A acting
// on root coordinates, A * coords(x) = coords(w(x)); the word s_{i1}...s_{ik}
// has matrix A_{i1} * ... * A_{ik}.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    std::size_t size() const { return keys_.size(); }
    Elt identity() const { return 0; }
    Elt gen(int i) const { return gens_[i - 1]; }  // i = 1..6
    Elt reflection(RootId r) const;                // reflection in root r

    Mat6 matrix(Elt x) const;
    Elt from_matrix(const Mat6& a) const;  // throws when a is not in W
    Elt mul(Elt x, Elt y) const;
    Elt inverse(Elt x) const { return inv_[x]; }
    Elt rmul_gen(Elt x, int i) const { return rmul_[x][i - 1]; }
    Elt lmul_gen(int i, Elt x) const { return lmul_[x][i - 1]; }
    Elt power(Elt x, i64 n) const;
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inverse(g)); }
    RootId act(Elt x, RootId r) const { return perm_[x][r]; }

    // lexicographically least reduced word in the generators 1..6
    std::vector<int> reduced_word(Elt x) const;
    int length(Elt x) const { return len_[x]; }
    // BFS predecessor: x = parent(x) * s_{last_gen(x)}
    Elt parent(Elt x) const { return parent_[x]; }
    int last_gen(Elt x) const { return last_[x]; }
    int max_length() const { return max_len_; }

    // product of reflections in positive roots, given by 1-based root indices
    Elt from_root_word(const std::vector<int>& indices) const;

    int order(Elt x) const;
    std::vector<Elt> centralizer(Elt x) const;
    std::vector<Elt> greedy_generators(const std::vector<Elt>& subgroup) const;

    int class_count() const { return static_cast<int>(class_reps_.size()); }
    int class_id(Elt x) const { return class_id_[x]; }
    Elt class_rep(int id) const { return class_reps_[id]; }
    std::size_t class_size(int id) const { return class_sizes_[id]; }
    // g with g * class_rep(class_id(x)) * g^{-1} = x
    Elt conjugator_from_rep(Elt x) const { return conjugator_[x]; }
    // g with g * x * g^{-1} = y, or size() if not conjugate
    Elt conjugator(Elt x, Elt y) const;

    std::vector<Elt> closure(const std::vector<Elt>& gens) const;
    Elt evaluate(const Word& w, const std::vector<Elt>& gens) const;
    Presentation presentation(const std::vector<Elt>& gens) const;
    Presentation coxeter_presentation() const;

private:
    std::uint64_t key_of(const Vec6& v) const;
    Vec6 image_rho(Elt x) const;
    Elt lookup(const Vec6& v) const;

    const RootSystem& rs_;
    std::vector<std::array<std::int8_t, 36>> mats_;
    std::vector<std::uint64_t> keys_;
    std::unordered_map<std::uint64_t, Elt> index_;
    std::vector<std::array<Elt, 6>> rmul_, lmul_;
    std::vector<Elt> inv_, parent_;
    std::vector<std::int8_t> last_;
    std::vector<std::uint8_t> len_;
    std::vector<std::array<std::uint8_t, kRoots>> perm_;
    std::array<Elt, 6> gens_{};
    int max_len_ = 0;
    std::vector<int> class_id_;
    std::vector<Elt> class_reps_, conjugator_;
    std::vector<std::size_t> class_sizes_;
};

// word utilities
Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
std::string word_to_string(const Word& w, const std::string& letters = "");

}  // namespace e6
