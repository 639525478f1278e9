#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace cmtk {

// Set of vertex indices stored as a bit vector. One 64-bit word covers
// complexes with up to 64 vertices; larger vertex sets spill into more words
// transparently. All binary operations require operands of equal universe
// size.
class Bitset {
  public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bitset of(int nbits, std::initializer_list<int> idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    int universe_size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
        return r;
    }
    // set difference
    Bitset minus(const Bitset& o) const {
        Bitset r(nbits_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
        return r;
    }
    Bitset with(int i) const {
        Bitset r = *this;
        r.set(i);
        return r;
    }
    Bitset without(int i) const {
        Bitset r = *this;
        r.reset(i);
        return r;
    }

    bool operator==(const Bitset& o) const { return w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return w_ != o.w_; }

    // Strict total order: the lowest differing bit belongs to the smaller
    // set. Restricted to sets of equal cardinality this is lexicographic
    // order on the sorted vertex-index sequences.
    bool operator<(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t d = w_[k] ^ o.w_[k];
            if (d) return w_[k] & (d & -d);
        }
        return false;
    }

    template <class F> void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }
    std::vector<int> to_indices() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
    int lowest() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull ^ w_.size();
        for (uint64_t w : w_) h = (h * 0x100000001b3ull) ^ std::hash<uint64_t>{}(w);
        return h;
    }

  private:
    int nbits_;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace cmtk
