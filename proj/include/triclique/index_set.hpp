#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace triclique {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using TriangleId = std::uint32_t;

/**
 * Fixed-capacity bit set over the labels 1..capacity.
 *
 * The tag parameter keeps vertex sets and edge sets from being mixed up:
 * a VertexSet cannot be XOR-ed with an EdgeSet. Symmetric difference is the
 * ring sum of the cycle space, so `a ^ b` on two EdgeSets is the GF(2) sum of
 * the corresponding edge subsets.
 */
template <class Tag>
class IndexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    IndexSet() = default;

    explicit IndexSet(std::size_t capacity)
        : capacity_(capacity), words_((capacity + word_bits - 1) / word_bits, 0)
    {
    }

    IndexSet(std::size_t capacity, std::initializer_list<std::uint32_t> labels) : IndexSet(capacity)
    {
        for (auto l : labels)
            insert(l);
    }

    template <class Range>
    static IndexSet from_range(std::size_t capacity, const Range& labels)
    {
        IndexSet s(capacity);
        for (auto l : labels)
            s.insert(static_cast<std::uint32_t>(l));
        return s;
    }

    static IndexSet full(std::size_t capacity)
    {
        IndexSet s(capacity);
        for (std::uint32_t i = 1; i <= capacity; ++i)
            s.insert(i);
        return s;
    }

    std::size_t capacity() const { return capacity_; }

    void insert(std::uint32_t label)
    {
        check(label);
        words_[(label - 1) / word_bits] |= Word{1} << ((label - 1) % word_bits);
    }

    void erase(std::uint32_t label)
    {
        check(label);
        words_[(label - 1) / word_bits] &= ~(Word{1} << ((label - 1) % word_bits));
    }

    bool contains(std::uint32_t label) const
    {
        if (label == 0 || label > capacity_)
            return false;
        return (words_[(label - 1) / word_bits] >> ((label - 1) % word_bits)) & 1u;
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    bool is_subset_of(const IndexSet& other) const
    {
        same_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    IndexSet& operator|=(const IndexSet& o) { return combine(o, std::bit_or<Word>{}); }
    IndexSet& operator&=(const IndexSet& o) { return combine(o, std::bit_and<Word>{}); }
    IndexSet& operator^=(const IndexSet& o) { return combine(o, std::bit_xor<Word>{}); }

    IndexSet& operator-=(const IndexSet& o)
    {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    friend bool operator==(const IndexSet& a, const IndexSet& b)
    {
        return a.capacity_ == b.capacity_ && a.words_ == b.words_;
    }

    /// Lexicographic order on the ascending label sequence.
    friend bool operator<(const IndexSet& a, const IndexSet& b)
    {
        return a.labels() < b.labels();
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<std::uint32_t>(i * word_bits + bit + 1));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> labels() const
    {
        std::vector<std::uint32_t> out;
        out.reserve(size());
        for_each([&](std::uint32_t l) { out.push_back(l); });
        return out;
    }

    /// Smallest label in the set, or 0 when empty.
    std::uint32_t first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<std::uint32_t>(i * word_bits + std::countr_zero(words_[i]) + 1);
        return 0;
    }

private:
    void check(std::uint32_t label) const
    {
        if (label == 0 || label > capacity_)
            throw std::out_of_range("IndexSet: label outside 1..capacity");
    }

    void same_capacity(const IndexSet& o) const
    {
        if (o.capacity_ != capacity_)
            throw std::invalid_argument("IndexSet: capacity mismatch");
    }

    template <class Op>
    IndexSet& combine(const IndexSet& o, Op op)
    {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = op(words_[i], o.words_[i]);
        return *this;
    }

    std::size_t capacity_ = 0;
    std::vector<Word> words_;
};

struct VertexTag;
struct EdgeTag;
struct TriangleTag;

using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;
using TriangleSet = IndexSet<TriangleTag>;

} // namespace triclique
