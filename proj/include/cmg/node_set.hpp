#ifndef CMG_NODE_SET_HPP
#define CMG_NODE_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace cmg {

using NodeIndex = std::size_t;

/// Fixed-capacity set of node indices backed by a 64-bit mask.
///
/// Graphs in this library are small (the property harness works with at most
/// a handful of nodes), so every node set is a single machine word and set
/// algebra is a couple of instructions. Iteration visits indices in
/// increasing order, which is also label order inside a MixedGraph.
class NodeSet {
public:
    static constexpr std::size_t capacity = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = NodeIndex;
        using difference_type = std::ptrdiff_t;
        using pointer = const NodeIndex*;
        using reference = NodeIndex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr NodeIndex operator*() const { return static_cast<NodeIndex>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
    constexpr NodeSet(std::initializer_list<NodeIndex> ids) {
        for (NodeIndex i : ids) insert(i);
    }

    static constexpr NodeSet single(NodeIndex i) { return NodeSet(std::uint64_t{1} << i); }
    /// {0, ..., n-1}
    static constexpr NodeSet first(std::size_t n) {
        return NodeSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(NodeIndex i) const { return (bits_ >> i) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    /// Smallest member; undefined on the empty set.
    constexpr NodeIndex front() const { return static_cast<NodeIndex>(std::countr_zero(bits_)); }

    constexpr void insert(NodeIndex i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(NodeIndex i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    constexpr NodeSet& operator|=(NodeSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr NodeSet& operator&=(NodeSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr NodeSet& operator-=(NodeSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return a |= b; }
    friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return a &= b; }
    friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return a -= b; }
    friend constexpr bool operator==(NodeSet, NodeSet) = default;
    friend constexpr auto operator<=>(NodeSet a, NodeSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of `universe`, starting with the empty set.
template <class F>
void for_each_subset(NodeSet universe, F&& f) {
    const std::uint64_t u = universe.bits();
    std::uint64_t s = 0;
    while (true) {
        f(NodeSet(s));
        if (s == u) break;
        s = (s - u) & u;
    }
}

}  // namespace cmg

#endif  // CMG_NODE_SET_HPP
