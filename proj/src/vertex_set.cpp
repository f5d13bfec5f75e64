#include "hpart/vertex_set.hpp"

#include <algorithm>

#include "hpart/errors.hpp"

namespace hpart {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members) {
        if (v >= universe)
            throw ContractError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe));
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet set(universe);
    for (std::size_t w = 0; w < set.words_.size(); ++w)
        set.words_[w] = ~std::uint64_t{0};
    if (const auto tail = universe % 64; tail != 0)
        set.words_.back() = (std::uint64_t{1} << tail) - 1;
    return set;
}

VertexSet VertexSet::from_range(std::size_t universe, const std::vector<Vertex>& members)
{
    VertexSet set(universe);
    for (Vertex v : members) {
        if (v >= universe)
            throw ContractError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe));
        set.insert(v);
    }
    return set;
}

std::size_t VertexSet::size() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const
{
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w)
        if ((words_[w] & other.words_[w]) != 0)
            return true;
    return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const
{
    const auto n = std::min(words_.size(), other.words_.size());
    std::size_t total = 0;
    for (std::size_t w = 0; w < n; ++w)
        total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return total;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const auto theirs = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~theirs) != 0)
            return false;
    }
    return true;
}

std::optional<Vertex> VertexSet::first() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return std::nullopt;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t w = 0; w < other.words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

bool VertexSet::operator==(const VertexSet& other) const
{
    const auto n = std::max(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        const auto mine = w < words_.size() ? words_[w] : 0;
        const auto theirs = w < other.words_.size() ? other.words_[w] : 0;
        if (mine != theirs)
            return false;
    }
    return true;
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

} // namespace hpart
