#include "hg/dist_table.hpp"

#include <cmath>

#include "hg/sampler.hpp"

namespace hg {

EdgeIndex::EdgeIndex(const VertexSet& vertices) : vertices_(vertices) {
    const std::size_t n = vertices.size();
    if (n > kDenseEnumerationMaxVertices ||
        ((std::uint64_t{1} << n) - 1) > kMaxIndexedEdges)
        throw BoundError("enumeration bound |Delta[V]| <= " +
                         std::to_string(kMaxIndexedEdges) + " exceeded for |V| = " +
                         std::to_string(n));
    edges_ = canonical_all_edges(vertices);
    positions_.reserve(edges_.size() * 2);
    for (std::size_t i = 0; i < edges_.size(); ++i) positions_[edges_[i].bits()] = i;
}

std::size_t EdgeIndex::index_of(Hyperedge e) const {
    auto it = positions_.find(e.bits());
    if (it == positions_.end())
        throw InvalidInput("edge is not part of this vertex set's Delta[V]");
    return it->second;
}

std::uint64_t EdgeIndex::to_mask(const Hypergraph& h) const {
    if (h.vertex_set() != vertices_)
        throw InvalidInput("hypergraph belongs to a different vertex set");
    std::uint64_t mask = 0;
    for (Hyperedge e : h.edges()) mask |= std::uint64_t{1} << index_of(e);
    return mask;
}

Hypergraph EdgeIndex::to_hypergraph(std::uint64_t mask) const {
    std::vector<Hyperedge> edges;
    edges.reserve(static_cast<std::size_t>(std::popcount(mask)));
    std::uint64_t m = mask;
    while (m) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
        m &= m - 1;
        if (i >= edges_.size()) throw InvalidInput("state index out of range");
        edges.push_back(edges_[i]);
    }
    return Hypergraph(vertices_, std::move(edges));
}

DistributionTable::DistributionTable(VertexSet vertices, std::vector<double> masses)
    : vertices_(std::move(vertices)), masses_(std::move(masses)) {
    EdgeIndex index(vertices_);
    if (masses_.size() != index.state_count())
        throw InvalidInput("mass array size must be 2^|Delta[V]|");
    double sum = 0.0;
    for (double m : masses_) {
        if (m < -1e-15 || std::isnan(m))
            throw InvalidInput("distribution masses must be non-negative");
        sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidInput("distribution masses must sum to 1 (got " + std::to_string(sum) + ")");
}

DistributionTable DistributionTable::seeded_random(const VertexSet& vertices,
                                                   std::uint64_t seed) {
    EdgeIndex index(vertices);
    SampleStream stream(seed);
    std::vector<double> masses(index.state_count());
    double sum = 0.0;
    for (double& m : masses) {
        m = stream.uniform() + 1e-9;  // keep full support
        sum += m;
    }
    for (double& m : masses) m /= sum;
    return DistributionTable(vertices, std::move(masses));
}

double total_variation(const DistributionTable& a, const DistributionTable& b) {
    if (a.vertex_set() != b.vertex_set())
        throw InvalidInput("total_variation: vertex sets differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a.masses()[i] - b.masses()[i]);
    return acc / 2.0;
}

double max_abs_diff(const DistributionTable& a, const DistributionTable& b) {
    if (a.vertex_set() != b.vertex_set())
        throw InvalidInput("max_abs_diff: vertex sets differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = std::max(acc, std::abs(a.masses()[i] - b.masses()[i]));
    return acc;
}

}  // namespace hg
