#ifndef INDECOMP_VERTEX_SET_HPP
#define INDECOMP_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace indecomp {

using Vertex = int;

/// Vertex universes are capped at the machine word width; constructors
/// reject anything larger.
inline constexpr int kMaxVertices = 64;

/// A subset of {0..63}, stored as a bitmask.  Used for vertex sets of
/// graphs and for faces of simplicial complexes.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr VertexSet single(Vertex v) { return from_bits(std::uint64_t{1} << v); }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet full(int n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static VertexSet of(std::initializer_list<Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.bits_ |= std::uint64_t{1} << v;
        return s;
    }

    static VertexSet of(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.bits_ |= std::uint64_t{1} << v;
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1; }

    constexpr VertexSet with(Vertex v) const { return from_bits(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(Vertex v) const { return from_bits(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Smallest member; the set must be nonempty.
    Vertex min() const {
        if (bits_ == 0) throw std::logic_error("min() of empty vertex set");
        return std::countr_zero(bits_);
    }

    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (Vertex v : *this) {
            if (!first) s += ", ";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order on vertex sets: lexicographic on the ascending member
/// sequences, so {0,3} < {1,2} and a set precedes its proper supersets.
/// This is the order used for facet lists and enumeration output.
inline bool face_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    std::uint64_t diff = a.bits() ^ b.bits();
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits() & low) != 0;
}

}

#endif
