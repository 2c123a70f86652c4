#ifndef STARFREE_VERTEX_SET_HPP
#define STARFREE_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace starfree {

using Vertex = std::size_t;

/// Subset of {0..n-1} stored as a bit row. The universe size n ties a set to
/// the graph it was built for; binary operations on different universes throw.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::span<const Vertex> members);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const;

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in increasing order.
    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
                bits &= bits - 1;
            }
        }
    }

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator^=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic comparison of the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    /// "{0, 2, 5}"
    std::string to_string() const;

private:
    void check_vertex(Vertex v) const;
    void check_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// (S ∪ L) \ (S ∩ L); throws GraphError when the universes differ.
VertexSet symmetric_difference(const VertexSet& s, const VertexSet& l);

} // namespace starfree

#endif
