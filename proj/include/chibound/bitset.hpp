#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace chibound {

// Fixed-width bitset sized to the host graph. Word-parallel intersection and
// popcount dominate the lemma procedures, so vertex sets live in this form
// throughout and convert to index vectors only at API edges.
class dyn_bitset {
public:
    dyn_bitset() = default;
    explicit dyn_bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }
    void clear() {
        for (auto& x : w_) x = 0;
    }

    dyn_bitset& operator&=(const dyn_bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    dyn_bitset& operator|=(const dyn_bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    dyn_bitset& and_not(const dyn_bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend dyn_bitset operator&(dyn_bitset a, const dyn_bitset& b) { return a &= b; }
    friend dyn_bitset operator|(dyn_bitset a, const dyn_bitset& b) { return a |= b; }

    // Flip within the declared width.
    dyn_bitset complement() const {
        dyn_bitset r(*this);
        for (auto& x : r.w_) x = ~x;
        r.trim();
        return r;
    }

    bool operator==(const dyn_bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator<(const dyn_bitset& o) const { return w_ < o.w_; }

    bool intersects(const dyn_bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const dyn_bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    int count_and(const dyn_bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    int count_and_not(const dyn_bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
        return c;
    }

    // -1 when exhausted.
    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    int find_next(int after) const {
        int i = after + 1;
        if (i >= nbits_) return -1;
        std::size_t wi = std::size_t(i) >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return int(wi * 64) + std::countr_zero(cur);
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (int v = find_first(); v >= 0; v = find_next(v)) fn(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static dyn_bitset of(int nbits, const std::vector<int>& members) {
        dyn_bitset b(nbits);
        for (int v : members) b.set(v);
        return b;
    }
    static dyn_bitset full(int nbits) {
        dyn_bitset b(nbits);
        for (auto& x : b.w_) x = ~std::uint64_t(0);
        b.trim();
        return b;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (~std::uint64_t(0)) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !w_.empty()) w_.back() = 0;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace chibound
