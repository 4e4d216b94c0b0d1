#pragma once

// Hypergraphs on small ordered vertex sets: subset/superset closures,
// complement, intersection/union, join and box product.  Edges are 64-bit
// bitsets over vertex positions, kept in canonical order (cardinality
// ascending, then position-lexicographic), so equality and serialization
// are bit-exact.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hg/error.hpp"

namespace hg {

/// Hard cap from the 64-bit edge representation.
inline constexpr std::size_t kMaxVertices = 64;

/// Operations that materialize every nonempty subset of V refuse vertex sets
/// above this size (2^20 edges is the largest dense enumeration we allow).
inline constexpr std::size_t kDenseEnumerationMaxVertices = 20;

/// Ordered list of distinct vertex labels; list position defines the order.
///
/// Labels may not contain whitespace, '#', top-level commas or unbalanced
/// parentheses; pair labels generated by `product` ("(l,r)") stay parseable
/// because their commas sit inside parentheses.
class VertexSet {
public:
    VertexSet() = default;  // empty placeholder; operations require size() >= 1
    explicit VertexSet(std::vector<std::string> labels);
    VertexSet(std::initializer_list<std::string> labels);

    /// Parse "a,b,c".
    static VertexSet from_csv(std::string_view csv);

    /// Concatenation of two label-disjoint vertex sets, left block first.
    static VertexSet joined(const VertexSet& left, const VertexSet& right);

    /// Pair labels "(l,r)", ordered left-major.
    static VertexSet product(const VertexSet& left, const VertexSet& right);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t pos) const { return labels_.at(pos); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> position_of(std::string_view label) const;
    bool disjoint_from(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<std::string> labels_;
};

/// Nonempty set of vertex positions stored as a bit mask.  An edge with
/// cardinality n+1 is an "n-hyperedge" (dimension n).
class Hyperedge {
public:
    explicit Hyperedge(std::uint64_t bits);
    static Hyperedge from_positions(std::span<const std::size_t> positions);
    static Hyperedge of(std::initializer_list<std::size_t> positions);

    std::uint64_t bits() const noexcept { return bits_; }
    int cardinality() const noexcept { return std::popcount(bits_); }
    int dimension() const noexcept { return cardinality() - 1; }
    bool contains(std::size_t pos) const noexcept {
        return pos < 64 && (bits_ >> pos) & 1u;
    }
    bool subset_of(Hyperedge o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    bool superset_of(Hyperedge o) const noexcept { return o.subset_of(*this); }
    bool valid_over(std::size_t vertex_count) const noexcept;
    std::vector<std::size_t> positions() const;

    friend bool operator==(Hyperedge, Hyperedge) = default;

private:
    std::uint64_t bits_;
};

/// Canonical edge order: cardinality ascending, then lexicographic on the
/// sorted position sequences (the smaller element of the symmetric
/// difference decides).
bool canonical_less(Hyperedge a, Hyperedge b) noexcept;
inline bool operator<(Hyperedge a, Hyperedge b) noexcept { return canonical_less(a, b); }

enum class HypergraphClass { Complex, Independence, Both, Neither };
std::string_view to_string(HypergraphClass c);

/// Finite set of hyperedges over a vertex set.  Immutable after
/// construction; edges are deduplicated and kept in canonical order.
/// The empty edge set is a legal hypergraph.
class Hypergraph {
public:
    Hypergraph(VertexSet vertices, std::vector<Hyperedge> edges);

    static Hypergraph empty(VertexSet vertices);
    /// The full hypergraph Delta[V]: every nonempty subset of V.
    static Hypergraph full(VertexSet vertices);

    const VertexSet& vertex_set() const noexcept { return vertices_; }
    std::span<const Hyperedge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool contains(Hyperedge e) const noexcept;
    bool is_subset_of(const Hypergraph& other) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    VertexSet vertices_;
    std::vector<Hyperedge> edges_;
};

/// Build a hypergraph from label lists, e.g. {{"a"},{"a","b"}}.
Hypergraph hypergraph_from_labels(const VertexSet& vertices,
                                  const std::vector<std::vector<std::string>>& edges);

/// All of Delta[V] in canonical order.  BoundError above
/// kDenseEnumerationMaxVertices.
std::vector<Hyperedge> canonical_all_edges(const VertexSet& vertices);

HypergraphClass classify(const Hypergraph& h);
bool is_complex(const Hypergraph& h);
bool is_independence(const Hypergraph& h);

/// gamma: Delta[V] minus the edge set.
Hypergraph complement(const Hypergraph& h);
/// Smallest simplicial complex containing h (all nonempty subsets of edges).
Hypergraph assoc_complex(const Hypergraph& h);
/// Largest simplicial complex contained in h.
Hypergraph lower_complex(const Hypergraph& h);
/// Smallest independence hypergraph containing h (all supersets within V).
Hypergraph assoc_indep(const Hypergraph& h);
/// Largest independence hypergraph contained in h.
Hypergraph lower_indep(const Hypergraph& h);

/// External faces E(K): edges outside the complex K all of whose proper
/// nonempty subsets lie in K.  Rejects non-complex input.
std::vector<Hyperedge> external_faces(const Hypergraph& complex);

/// Co-external faces E-bar(L): edges outside the independence hypergraph L
/// all of whose proper supersets within V lie in L.  Rejects non-independence
/// input.
std::vector<Hyperedge> co_external_faces(const Hypergraph& indep);

enum class Extremal { Maximal, Minimal };
std::vector<Hyperedge> extremal_edges(const Hypergraph& h, Extremal mode);

enum class SetOp { Intersect, Unite };
/// Edge-set intersection or union; vertex sets must be identical.
Hypergraph combine(const Hypergraph& a, const Hypergraph& b, SetOp op);

/// Join on label-disjoint vertex sets: all unions of one edge from each side,
/// plus both edge sets, on the concatenated vertex set.
Hypergraph join(const Hypergraph& left, const Hypergraph& right);

/// Box product: pairwise Cartesian products of edges on the pair vertex set.
Hypergraph box_product(const Hypergraph& left, const Hypergraph& right);

/// Total map between vertex sets, by position.
class VertexMap {
public:
    VertexMap(VertexSet domain, VertexSet codomain, std::vector<std::size_t> mapping);
    static VertexMap identity(const VertexSet& v);

    const VertexSet& domain() const noexcept { return domain_; }
    const VertexSet& codomain() const noexcept { return codomain_; }
    std::size_t apply(std::size_t pos) const { return mapping_.at(pos); }
    Hyperedge image(Hyperedge e) const;

private:
    VertexSet domain_;
    VertexSet codomain_;
    std::vector<std::size_t> mapping_;
};

/// Edge-wise image { f(sigma) : sigma in h } on f's codomain.
Hypergraph apply_vertex_map(const VertexMap& f, const Hypergraph& h);

}  // namespace hg
