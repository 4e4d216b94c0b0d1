#include "hg/sampler.hpp"

#include <algorithm>
#include <unordered_set>

namespace hg {

namespace {

// splitmix64 finalizer; decorrelates replicate substreams.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double SampleStream::uniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

SampleStream SampleStream::substream(std::uint64_t seed, std::uint64_t index) {
    return SampleStream(mix64(seed ^ mix64(index + 1)));
}

Hypergraph sample_hypergraph(const ProbabilityMap& p, SampleStream& stream) {
    std::vector<Hyperedge> edges;
    for (Hyperedge e : canonical_all_edges(p.vertex_set()))
        if (stream.bernoulli(p.evaluate(e))) edges.push_back(e);
    return Hypergraph(p.vertex_set(), std::move(edges));
}

Hypergraph sample_complex(const ProbabilityMap& p, SampleStream& stream) {
    const VertexSet& v = p.vertex_set();
    const std::size_t n = v.size();
    std::unordered_set<std::uint64_t> accepted;
    std::vector<Hyperedge> edges;

    // Stage 0: singletons.
    std::vector<Hyperedge> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        Hyperedge s(std::uint64_t{1} << i);
        if (stream.bernoulli(p.evaluate(s))) {
            accepted.insert(s.bits());
            edges.push_back(s);
            frontier.push_back(s);
        }
    }

    // Stage k: candidates are one vertex above an accepted edge with every
    // facet accepted; each candidate is drawn exactly once, in canonical order.
    while (!frontier.empty()) {
        std::vector<Hyperedge> candidates;
        std::unordered_set<std::uint64_t> seen;
        for (Hyperedge tau : frontier) {
            for (std::size_t vtx = 0; vtx < n; ++vtx) {
                if (tau.contains(vtx)) continue;
                std::uint64_t sigma = tau.bits() | (std::uint64_t{1} << vtx);
                if (!seen.insert(sigma).second) continue;
                bool ok = true;
                std::uint64_t b = sigma;
                while (b) {
                    std::uint64_t low = b & (~b + 1);
                    b &= b - 1;
                    std::uint64_t facet = sigma & ~low;
                    if (facet != 0 && !accepted.count(facet)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) candidates.push_back(Hyperedge(sigma));
            }
        }
        std::sort(candidates.begin(), candidates.end(), canonical_less);
        frontier.clear();
        for (Hyperedge c : candidates) {
            if (stream.bernoulli(p.evaluate(c))) {
                accepted.insert(c.bits());
                edges.push_back(c);
                frontier.push_back(c);
            }
        }
    }
    return Hypergraph(v, std::move(edges));
}

Hypergraph sample_indep(const ProbabilityMap& p, SampleStream& stream) {
    const VertexSet& v = p.vertex_set();
    const std::size_t n = v.size();
    const std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::unordered_set<std::uint64_t> accepted;
    std::vector<Hyperedge> edges;

    std::vector<Hyperedge> frontier;
    if (stream.bernoulli(p.evaluate(Hyperedge(full)))) {
        accepted.insert(full);
        edges.push_back(Hyperedge(full));
        frontier.push_back(Hyperedge(full));
    }

    // Top-down: candidates are one vertex below an accepted edge with every
    // superset-parent accepted.
    while (!frontier.empty()) {
        std::vector<Hyperedge> candidates;
        std::unordered_set<std::uint64_t> seen;
        for (Hyperedge tau : frontier) {
            for (std::size_t vtx : tau.positions()) {
                std::uint64_t sigma = tau.bits() & ~(std::uint64_t{1} << vtx);
                if (sigma == 0 || !seen.insert(sigma).second) continue;
                bool ok = true;
                for (std::size_t u = 0; u < n; ++u) {
                    std::uint64_t parent = sigma | (std::uint64_t{1} << u);
                    if (parent == sigma) continue;
                    if (!accepted.count(parent)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) candidates.push_back(Hyperedge(sigma));
            }
        }
        std::sort(candidates.begin(), candidates.end(), canonical_less);
        frontier.clear();
        for (Hyperedge c : candidates) {
            if (stream.bernoulli(p.evaluate(c))) {
                accepted.insert(c.bits());
                edges.push_back(c);
                frontier.push_back(c);
            }
        }
    }
    return Hypergraph(v, std::move(edges));
}

Hypergraph sample_model(const ModelDescriptor& model, SampleStream& stream) {
    switch (model.family) {
        case ModelFamily::PBar: return sample_hypergraph(model.map, stream);
        case ModelFamily::P: return sample_complex(model.map, stream);
        case ModelFamily::Q: return sample_indep(model.map, stream);
    }
    throw Error("unreachable model family");
}

}  // namespace hg
