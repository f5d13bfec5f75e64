#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hpart {

using Vertex = std::uint32_t;

/// Set of vertex ids drawn from a fixed universe 0..universe()-1, stored as
/// a bitset. Sets over at most 128 vertices live entirely inline.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_range(std::size_t universe, const std::vector<Vertex>& members);

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const;
    bool empty() const;
    bool intersects(const VertexSet& other) const;
    std::size_t intersection_size(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    // Smallest member, if any.
    std::optional<Vertex> first() const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const;

    // Members in ascending order.
    template <typename F>
    void for_each(F&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<Vertex>(std::countr_zero(bits));
                fn(static_cast<Vertex>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;

private:
    using Words = boost::container::small_vector<std::uint64_t, 2>;

    std::size_t universe_ = 0;
    Words words_;
};

} // namespace hpart
