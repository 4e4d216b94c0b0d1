#pragma once

// Exact distributions over all hypergraphs on a small vertex set, stored
// densely and indexed by edge-set bitmask: index bit i means the i-th edge
// of Delta[V] in canonical order is present.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hg/core.hpp"

namespace hg {

/// Largest admissible |Delta[V]| for dense tables (so |V| <= 4).
inline constexpr std::size_t kMaxIndexedEdges = 20;

/// Canonical enumeration of Delta[V] with edge <-> index-bit conversions.
class EdgeIndex {
public:
    explicit EdgeIndex(const VertexSet& vertices);

    const VertexSet& vertex_set() const noexcept { return vertices_; }
    std::span<const Hyperedge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t state_count() const noexcept { return std::size_t{1} << edges_.size(); }

    std::size_t index_of(Hyperedge e) const;
    std::uint64_t to_mask(const Hypergraph& h) const;
    Hypergraph to_hypergraph(std::uint64_t mask) const;

private:
    VertexSet vertices_;
    std::vector<Hyperedge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> positions_;
};

/// Probability mass over every hypergraph on a vertex set.
/// Masses are non-negative and sum to 1 within 1e-9.
class DistributionTable {
public:
    DistributionTable(VertexSet vertices, std::vector<double> masses);

    /// Normalized table of seeded uniform masses (full support).
    static DistributionTable seeded_random(const VertexSet& vertices, std::uint64_t seed);

    const VertexSet& vertex_set() const noexcept { return vertices_; }
    std::span<const double> masses() const noexcept { return masses_; }
    std::size_t size() const noexcept { return masses_.size(); }
    double mass(std::uint64_t index) const { return masses_.at(index); }

private:
    VertexSet vertices_;
    std::vector<double> masses_;
};

/// (1/2) sum |a - b|, in [0,1]; vertex sets must match.
double total_variation(const DistributionTable& a, const DistributionTable& b);

double max_abs_diff(const DistributionTable& a, const DistributionTable& b);

}  // namespace hg
