#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace turan {

// Fixed-width vertex bitset. Kernels instantiate Words = 1 for graphs with
// at most 64 vertices and fall back to the public 4-word VertexSet otherwise.
template <std::size_t Words>
class BasicBitset {
public:
    static constexpr std::size_t kWords = Words;
    static constexpr int kCapacity = static_cast<int>(Words * 64);

    constexpr BasicBitset() = default;
    BasicBitset(std::initializer_list<int> vs) {
        for (int v : vs) set(v);
    }

    static BasicBitset range(int n) {
        BasicBitset b;
        for (std::size_t w = 0; w < Words && n > 0; ++w, n -= 64)
            b.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return b;
    }

    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    [[nodiscard]] bool any() const { return !empty(); }

    // Lowest set bit, or -1.
    [[nodiscard]] int first() const {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }
    // Lowest set bit strictly greater than v, or -1.
    [[nodiscard]] int next(int v) const {
        ++v;
        std::size_t w = static_cast<std::size_t>(v >> 6);
        if (w >= Words) return -1;
        std::uint64_t cur = (v & 63) ? words_[w] & (~std::uint64_t{0} << (v & 63)) : words_[w];
        while (true) {
            if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
            if (++w >= Words) return -1;
            cur = words_[w];
        }
    }

    // Remove and return the lowest set bit; precondition: !empty().
    int pop_first() {
        for (std::size_t w = 0; w < Words; ++w) {
            if (words_[w]) {
                int b = std::countr_zero(words_[w]);
                words_[w] &= words_[w] - 1;
                return static_cast<int>(w * 64) + b;
            }
        }
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < Words; ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                f(static_cast<int>(w * 64) + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    [[nodiscard]] bool is_subset_of(const BasicBitset& o) const {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const BasicBitset& o) const {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    BasicBitset& operator&=(const BasicBitset& o) {
        for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    BasicBitset& operator|=(const BasicBitset& o) {
        for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    BasicBitset& operator-=(const BasicBitset& o) {
        for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend BasicBitset operator&(BasicBitset a, const BasicBitset& b) { return a &= b; }
    friend BasicBitset operator|(BasicBitset a, const BasicBitset& b) { return a |= b; }
    friend BasicBitset operator-(BasicBitset a, const BasicBitset& b) { return a -= b; }

    friend bool operator==(const BasicBitset&, const BasicBitset&) = default;

    // Lexicographic order on the ascending vertex lists, so {0,5} < {1}.
    friend std::strong_ordering operator<=>(const BasicBitset& a, const BasicBitset& b) {
        int x = a.first();
        int y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
            x = a.next(x);
            y = b.next(y);
        }
        if (x < 0 && y < 0) return std::strong_ordering::equal;
        return x < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    [[nodiscard]] std::uint64_t word(std::size_t w) const { return words_[w]; }
    void set_word(std::size_t w, std::uint64_t value) { words_[w] = value; }

    template <std::size_t Other>
    [[nodiscard]] BasicBitset<Other> narrow() const {
        BasicBitset<Other> out;
        for (std::size_t w = 0; w < Other && w < Words; ++w) out.set_word(w, words_[w]);
        return out;
    }

private:
    std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicBitset<4>;

inline constexpr int kMaxVertices = VertexSet::kCapacity;

}  // namespace turan
