#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace conley {

/// Fixed-size bitset sized at runtime; the cell-set workhorse.
class Bits {
  public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true) {
        uint64_t m = 1ull << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator-=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    Bits complement() const {
        Bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    friend bool operator==(const Bits& a, const Bits& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i) if (get(i)) out.push_back(i);
        return out;
    }

  private:
    void trim() {
        if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace conley
