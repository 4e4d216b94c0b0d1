#pragma once

// Probability maps p: Delta[V] -> [0,1], the three Erdos-Renyi-type mass
// functions (hypergraph / complex / independence-hypergraph models), the
// pointwise parameter algebra, and the closed-form pushforward products.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hg/core.hpp"

namespace hg {

/// Immutable edge-probability assignment over Delta[V].
///
/// Representations: constant, per-dimension vector (indexed by cardinality-1,
/// padded with 0 above the listed dimensions), explicit table, 1-p
/// complement, pointwise product (meet), pointwise 1-(1-a)(1-b) (join-union),
/// and the block-split form on a joined vertex set where
/// p(sigma) = left(sigma ∩ V') * right(sigma ∩ V'') with empty blocks
/// contributing factor 1.
class ProbabilityMap {
public:
    static ProbabilityMap constant(VertexSet v, double value);
    static ProbabilityMap per_dimension(VertexSet v, std::vector<double> dims);
    static ProbabilityMap table(VertexSet v, std::unordered_map<std::uint64_t, double> values);
    /// Table with one independent uniform value per edge of Delta[V], from a seed.
    static ProbabilityMap seeded_random_table(VertexSet v, std::uint64_t seed);

    const VertexSet& vertex_set() const;
    /// Spec string usable in manifests ("const:0.5", "dims:1,0.5", ...).
    const std::string& description() const;

    double operator()(Hyperedge sigma) const { return evaluate(sigma); }
    double evaluate(Hyperedge sigma) const;

    friend ProbabilityMap complement_map(const ProbabilityMap& p);
    friend ProbabilityMap meet(const ProbabilityMap& a, const ProbabilityMap& b);
    friend ProbabilityMap join_union(const ProbabilityMap& a, const ProbabilityMap& b);
    friend ProbabilityMap star(const ProbabilityMap& left, const ProbabilityMap& right);

private:
    struct Node;
    explicit ProbabilityMap(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Pointwise 1-p. Unwraps an existing complement so the involution is exact.
ProbabilityMap complement_map(const ProbabilityMap& p);
/// Pointwise product; vertex sets must match.
ProbabilityMap meet(const ProbabilityMap& a, const ProbabilityMap& b);
/// Pointwise 1-(1-a)(1-b); vertex sets must match.
ProbabilityMap join_union(const ProbabilityMap& a, const ProbabilityMap& b);
/// Block-split map on joined(left.V, right.V).
ProbabilityMap star(const ProbabilityMap& left, const ProbabilityMap& right);

enum class MapBinaryOp { Meet, JoinUnion, Star };
ProbabilityMap combine_maps(const ProbabilityMap& a, const ProbabilityMap& b, MapBinaryOp op);

enum class PresetModel { Gnp, LinialMeshulam, MeshulamWallach, Clique };

/// Per-dimension presets: gnp -> (1,q,0,...), linial_meshulam -> (1,1,q,0,...),
/// meshulam_wallach(d) -> ones up to d-1, q at d, zeros above,
/// clique -> (1,q,1,...,1).
ProbabilityMap preset_map(PresetModel model, double q, const VertexSet& v, std::size_t d = 0);

/// Parse the probability-spec grammar:
///   const:<float> | dims:<f>,<f>,... | table:<path> | rtable:<seed> |
///   gnp:<float> | lm:<float> | mw:<d>:<float> | clique:<float>
/// Table files contain lines "<edge>\t<float>" with the edge written as
/// comma-separated member labels.
ProbabilityMap parse_prob_spec(std::string_view spec, const VertexSet& v);

enum class ModelFamily { PBar, P, Q };
std::string_view to_string(ModelFamily f);

/// A model family together with its parameter map.
struct ModelDescriptor {
    ModelFamily family;
    ProbabilityMap map;
};

/// Product over all of Delta[V]: prod_{s in H} p(s) * prod_{s notin H} (1-p(s)).
double mass_hypergraph(const ProbabilityMap& p, const Hypergraph& h);

/// prod_{s in K} p(s) * prod_{s in E(K)} (1-p(s)); K must be a complex.
double mass_complex(const ProbabilityMap& p, const Hypergraph& k);

/// prod_{s in L} p(s) * prod_{s in Ebar(L)} (1-p(s)); L must be an
/// independence hypergraph.
double mass_indep(const ProbabilityMap& p, const Hypergraph& l);

enum class ClosureOp { Up, Down, IUp, IDown };  // Delta, delta, Delta-bar, delta-bar

/// Closed-form mass of `target` under the pushforward of the product-form
/// hypergraph law through a closure operator:
///   Up:    prod_{max(K)} p   * prod_{not in K} (1-p)     (K a complex)
///   IUp:   prod_{min(L)} p   * prod_{not in L} (1-p)     (L independence)
///   Down:  prod_{K} p        * prod_{E(K)} (1-p)
///   IDown: prod_{L} p        * prod_{Ebar(L)} (1-p)
double pushforward_closed_form(const ProbabilityMap& p, const Hypergraph& target, ClosureOp op);

}  // namespace hg
