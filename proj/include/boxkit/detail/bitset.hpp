#ifndef BOXKIT_DETAIL_BITSET_HPP
#define BOXKIT_DETAIL_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace boxkit::detail {

// Dynamic bitset with the first 64 bits stored inline. Graphs at this
// library's scale rarely exceed 64 vertices, so adjacency rows and the
// search loops built on them avoid heap traffic in the common case.
// Binary operations assume both operands share the same capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits),
          tail_(nbits > 64 ? std::size_t((nbits - 1) / 64) : 0, 0) {}

    static Bitset full(int nbits) {
        Bitset b(nbits);
        b.head_ = low_mask(nbits);
        for (std::size_t k = 0; k < b.tail_.size(); ++k)
            b.tail_[k] = low_mask(nbits - 64 * int(k + 1));
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        if (i < 64) return (head_ >> i) & 1u;
        return (tail_[std::size_t(i / 64) - 1] >> (i & 63)) & 1u;
    }
    void set(int i) {
        if (i < 64) head_ |= std::uint64_t{1} << i;
        else tail_[std::size_t(i / 64) - 1] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        if (i < 64) head_ &= ~(std::uint64_t{1} << i);
        else tail_[std::size_t(i / 64) - 1] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() {
        head_ = 0;
        for (auto& w : tail_) w = 0;
    }

    int count() const {
        int c = std::popcount(head_);
        for (auto w : tail_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        if (head_) return false;
        for (auto w : tail_)
            if (w) return false;
        return true;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.head_ == b.head_ && a.tail_ == b.tail_;
    }

    Bitset& operator|=(const Bitset& o) {
        head_ |= o.head_;
        for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] |= o.tail_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        head_ &= o.head_;
        for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] &= o.tail_[k];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        head_ &= ~o.head_;
        for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] &= ~o.tail_[k];
        return *this;
    }

    bool subset_of(const Bitset& o) const {
        if (head_ & ~o.head_) return false;
        for (std::size_t k = 0; k < tail_.size(); ++k)
            if (tail_[k] & ~o.tail_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        if (head_ & o.head_) return true;
        for (std::size_t k = 0; k < tail_.size(); ++k)
            if (tail_[k] & o.tail_[k]) return true;
        return false;
    }

    // first set bit, or -1
    int first() const {
        if (head_) return std::countr_zero(head_);
        for (std::size_t k = 0; k < tail_.size(); ++k)
            if (tail_[k]) return 64 * int(k + 1) + std::countr_zero(tail_[k]);
        return -1;
    }

    // visits set bits in ascending order
    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t w = head_; w; w &= w - 1) f(std::countr_zero(w));
        for (std::size_t k = 0; k < tail_.size(); ++k)
            for (std::uint64_t w = tail_[k]; w; w &= w - 1)
                f(64 * int(k + 1) + std::countr_zero(w));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    static std::uint64_t low_mask(int n) {
        if (n >= 64) return ~std::uint64_t{0};
        if (n <= 0) return 0;
        return (std::uint64_t{1} << n) - 1;
    }

    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> tail_;
    int nbits_ = 0;
};

}  // namespace boxkit::detail

#endif
