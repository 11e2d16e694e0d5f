#include "e6/coset_enum.hpp"

#include <deque>
#include <stdexcept>

namespace e6 {

namespace {

class CosetTable {
public:
    CosetTable(int ngens, std::size_t cap) : ncols_(2 * ngens), cap_(cap) {
        table_.reserve(std::min<std::size_t>(cap, 1 << 16) * ncols_);
        add_row();
    }

    static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
    static int inv(int c) { return c ^ 1; }

    bool alive(int c) const { return fwd_[c] == c; }
    int get(int c, int x) const { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
    void set(int c, int x, int v) { table_[static_cast<std::size_t>(c) * ncols_ + x] = v; }
    int rows() const { return static_cast<int>(fwd_.size()); }
    std::size_t live() const { return live_; }
    bool overflow() const { return overflow_; }

    // returns -1 once the cap is reached
    int define(int c, int x) {
        if (fwd_.size() >= cap_) {
            overflow_ = true;
            return -1;
        }
        int d = add_row();
        set(c, x, d);
        set(d, inv(x), c);
        return d;
    }

    void scan_and_fill(int c, const std::vector<int>& rel) {
        const int n = static_cast<int>(rel.size());
        int f = c, b = c, i = 0, j = n - 1;
        for (;;) {
            while (i <= j && get(f, col(rel[i])) >= 0) f = get(f, col(rel[i++]));
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && get(b, inv(col(rel[j]))) >= 0) b = get(b, inv(col(rel[j--])));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                set(f, col(rel[i]), b);
                set(b, inv(col(rel[i])), f);
                return;
            }
            if (define(f, col(rel[i])) < 0) return;
        }
    }

    void coincidence(int a, int b) {
        std::deque<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop_front();
            for (int x = 0; x < ncols_; ++x) {
                int f = get(e, x);
                if (f < 0) continue;
                if (get(f, inv(x)) == e) set(f, inv(x), -1);
                int e1 = rep(e), f1 = rep(f);
                if (get(e1, x) >= 0)
                    merge(f1, get(e1, x), queue);
                else if (get(f1, inv(x)) >= 0)
                    merge(e1, get(f1, inv(x)), queue);
                else {
                    set(e1, x, f1);
                    set(f1, inv(x), e1);
                }
            }
        }
    }

private:
    int add_row() {
        int d = static_cast<int>(fwd_.size());
        fwd_.push_back(d);
        table_.insert(table_.end(), ncols_, -1);
        ++live_;
        return d;
    }

    int rep(int c) {
        int r = c;
        while (fwd_[r] != r) r = fwd_[r];
        while (fwd_[c] != r) {
            int n = fwd_[c];
            fwd_[c] = r;
            c = n;
        }
        return r;
    }

    void merge(int a, int b, std::deque<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        fwd_[b] = a;
        --live_;
        queue.push_back(b);
    }

    int ncols_;
    std::size_t cap_;
    std::vector<int> table_;
    std::vector<int> fwd_;
    std::size_t live_ = 0;
    bool overflow_ = false;
};

}  // namespace

std::size_t enumerate_cosets(int ngens, const std::vector<std::vector<int>>& relators, std::size_t max_cosets) {
    if (ngens <= 0) return 1;
    for (const auto& r : relators)
        for (int l : r)
            if (l == 0 || l > ngens || -l > ngens) throw std::invalid_argument("bad letter in relator");
    CosetTable t(ngens, max_cosets);
    for (int c = 0; c < t.rows(); ++c) {
        for (const auto& rel : relators) {
            if (!t.alive(c)) break;
            if (!rel.empty()) t.scan_and_fill(c, rel);
            if (t.overflow()) return 0;
        }
        if (!t.alive(c)) continue;
        for (int x = 0; x < 2 * ngens; ++x)
            if (t.get(c, x) < 0 && t.define(c, x) < 0) return 0;
    }
    return t.live();
}

}  // namespace e6
