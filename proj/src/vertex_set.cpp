#include "starfree/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "starfree/errors.hpp"

namespace starfree {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::check_vertex(Vertex v) const {
    if (v >= universe_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for universe of size " +
                         std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw GraphError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                         std::to_string(other.universe_) + ")");
}

bool VertexSet::contains(Vertex v) const {
    check_vertex(v);
    return (words_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::insert(Vertex v) {
    check_vertex(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    check_vertex(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Vertex v) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

VertexSet symmetric_difference(const VertexSet& s, const VertexSet& l) { return s ^ l; }

} // namespace starfree
