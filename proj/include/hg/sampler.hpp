#pragma once

// Seeded sampling of the three model families.  Draw order is pinned to the
// canonical edge order of the candidate set at every stage, so equal seeds
// give bit-identical results everywhere.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "hg/core.hpp"
#include "hg/prob.hpp"

namespace hg {

/// Deterministic uniform-[0,1) source.  Single-owner: movable, not copyable.
/// Parallel replication derives one substream per replicate index.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed);
    SampleStream(SampleStream&&) noexcept = default;
    SampleStream& operator=(SampleStream&&) noexcept = default;
    SampleStream(const SampleStream&) = delete;
    SampleStream& operator=(const SampleStream&) = delete;

    /// (x >> 11) * 2^-53: fully specified, identical across platforms.
    double uniform();
    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t draw_count() const noexcept { return draws_; }

    /// Independent stream for replicate `index` of a batch keyed by `seed`.
    static SampleStream substream(std::uint64_t seed, std::uint64_t index);

    static constexpr std::string_view kGeneratorTag = "mt19937_64/v1";

private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

/// A sampled hypergraph plus the description of how it was produced.
struct SampledObject {
    VertexSet vertex_set;
    Hypergraph hypergraph;
    std::string descriptor;
};

/// One Bernoulli draw per edge of Delta[V] in canonical order.
Hypergraph sample_hypergraph(const ProbabilityMap& p, SampleStream& stream);

/// Stage-wise: accept singletons, then at each higher cardinality draw
/// exactly the edges all of whose facets were accepted.  Always a complex.
Hypergraph sample_complex(const ProbabilityMap& p, SampleStream& stream);

/// Dual, top-down from V.  Always an independence hypergraph.
Hypergraph sample_indep(const ProbabilityMap& p, SampleStream& stream);

/// Dispatch on the model family.
Hypergraph sample_model(const ModelDescriptor& model, SampleStream& stream);

}  // namespace hg
