#include "hg/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace hg {

namespace {

void validate_label(const std::string& label) {
    if (label.empty()) throw InvalidInput("vertex label must be nonempty");
    int depth = 0;
    for (char c : label) {
        if (static_cast<unsigned char>(c) <= ' ' || c == 0x7f)
            throw InvalidInput("vertex label contains whitespace or control character: '" + label + "'");
        if (c == '#') throw InvalidInput("vertex label may not contain '#': '" + label + "'");
        if (c == '(') ++depth;
        if (c == ')') {
            if (--depth < 0) throw InvalidInput("unbalanced ')' in vertex label: '" + label + "'");
        }
        if (c == ',' && depth == 0)
            throw InvalidInput("vertex label may not contain a top-level comma: '" + label + "'");
    }
    if (depth != 0) throw InvalidInput("unbalanced '(' in vertex label: '" + label + "'");
}

std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void require_dense_bound(std::size_t n, const char* what) {
    if (n > kDenseEnumerationMaxVertices)
        throw BoundError(std::string(what) + " enumerates all of Delta[V]; |V| <= " +
                         std::to_string(kDenseEnumerationMaxVertices) + " required, got " +
                         std::to_string(n));
}

std::unordered_set<std::uint64_t> edge_bit_set(const Hypergraph& h) {
    std::unordered_set<std::uint64_t> s;
    s.reserve(h.edge_count() * 2 + 1);
    for (Hyperedge e : h.edges()) s.insert(e.bits());
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidInput("vertex set must have at least one label");
    if (labels_.size() > kMaxVertices)
        throw InvalidInput("vertex set exceeds " + std::to_string(kMaxVertices) + " labels");
    for (const auto& l : labels_) validate_label(l);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw InvalidInput("duplicate vertex label: '" + labels_[i] + "'");
}

VertexSet::VertexSet(std::initializer_list<std::string> labels)
    : VertexSet(std::vector<std::string>(labels)) {}

VertexSet VertexSet::from_csv(std::string_view csv) {
    std::vector<std::string> labels;
    std::string cur;
    int depth = 0;
    for (char c : csv) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            labels.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    labels.push_back(cur);
    return VertexSet(std::move(labels));
}

VertexSet VertexSet::joined(const VertexSet& left, const VertexSet& right) {
    if (!left.disjoint_from(right))
        throw InvalidInput("join requires label-disjoint vertex sets");
    std::vector<std::string> labels = left.labels_;
    labels.insert(labels.end(), right.labels_.begin(), right.labels_.end());
    return VertexSet(std::move(labels));
}

VertexSet VertexSet::product(const VertexSet& left, const VertexSet& right) {
    std::vector<std::string> labels;
    labels.reserve(left.size() * right.size());
    for (const auto& l : left.labels_)
        for (const auto& r : right.labels_) labels.push_back("(" + l + "," + r + ")");
    return VertexSet(std::move(labels));
}

std::optional<std::size_t> VertexSet::position_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
    for (const auto& l : labels_)
        if (other.position_of(l)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hyperedge

Hyperedge::Hyperedge(std::uint64_t bits) : bits_(bits) {
    if (bits_ == 0) throw InvalidInput("hyperedge must be nonempty");
}

Hyperedge Hyperedge::from_positions(std::span<const std::size_t> positions) {
    std::uint64_t bits = 0;
    for (std::size_t p : positions) {
        if (p >= kMaxVertices) throw InvalidInput("vertex position out of range");
        bits |= std::uint64_t{1} << p;
    }
    return Hyperedge(bits);
}

Hyperedge Hyperedge::of(std::initializer_list<std::size_t> positions) {
    std::vector<std::size_t> v(positions);
    return from_positions(v);
}

bool Hyperedge::valid_over(std::size_t vertex_count) const noexcept {
    return bits_ != 0 && (bits_ & ~full_mask(vertex_count)) == 0;
}

std::vector<std::size_t> Hyperedge::positions() const {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        b &= b - 1;
    }
    return out;
}

bool canonical_less(Hyperedge a, Hyperedge b) noexcept {
    int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca < cb;
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // The edge owning the smallest differing position comes first.
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

std::string_view to_string(HypergraphClass c) {
    switch (c) {
        case HypergraphClass::Complex: return "complex";
        case HypergraphClass::Independence: return "independence";
        case HypergraphClass::Both: return "both";
        case HypergraphClass::Neither: return "neither";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(VertexSet vertices, std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.size() == 0) throw InvalidInput("hypergraph requires a nonempty vertex set");
    for (Hyperedge e : edges_)
        if (!e.valid_over(vertices_.size()))
            throw InvalidInput("hyperedge uses positions outside the vertex set");
    std::sort(edges_.begin(), edges_.end(), canonical_less);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::empty(VertexSet vertices) {
    return Hypergraph(std::move(vertices), {});
}

Hypergraph Hypergraph::full(VertexSet vertices) {
    std::vector<Hyperedge> edges = canonical_all_edges(vertices);
    return Hypergraph(std::move(vertices), std::move(edges));
}

bool Hypergraph::contains(Hyperedge e) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), e, canonical_less);
}

bool Hypergraph::is_subset_of(const Hypergraph& other) const {
    if (vertices_ != other.vertices_) return false;
    return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(),
                         edges_.end(), canonical_less);
}

Hypergraph hypergraph_from_labels(const VertexSet& vertices,
                                  const std::vector<std::vector<std::string>>& edges) {
    std::vector<Hyperedge> out;
    out.reserve(edges.size());
    for (const auto& members : edges) {
        std::uint64_t bits = 0;
        for (const auto& m : members) {
            auto pos = vertices.position_of(m);
            if (!pos) throw InvalidInput("unknown vertex label: '" + m + "'");
            bits |= std::uint64_t{1} << *pos;
        }
        out.push_back(Hyperedge(bits));
    }
    return Hypergraph(vertices, std::move(out));
}

std::vector<Hyperedge> canonical_all_edges(const VertexSet& vertices) {
    require_dense_bound(vertices.size(), "canonical_all_edges");
    std::uint64_t all = full_mask(vertices.size());
    std::vector<Hyperedge> edges;
    edges.reserve(all);
    for (std::uint64_t m = 1; m <= all; ++m) edges.push_back(Hyperedge(m));
    std::sort(edges.begin(), edges.end(), canonical_less);
    return edges;
}

// ---------------------------------------------------------------------------
// Classification and unary operators

HypergraphClass classify(const Hypergraph& h) {
    const std::size_t n = h.vertex_set().size();
    bool complex = true, indep = true;
    for (Hyperedge e : h.edges()) {
        if (complex && e.cardinality() > 1) {
            for (std::size_t v : e.positions()) {
                std::uint64_t facet = e.bits() & ~(std::uint64_t{1} << v);
                if (!h.contains(Hyperedge(facet))) {
                    complex = false;
                    break;
                }
            }
        }
        if (indep) {
            for (std::size_t v = 0; v < n && indep; ++v) {
                if (e.contains(v)) continue;
                if (!h.contains(Hyperedge(e.bits() | (std::uint64_t{1} << v)))) indep = false;
            }
        }
        if (!complex && !indep) return HypergraphClass::Neither;
    }
    if (complex && indep) return HypergraphClass::Both;
    if (complex) return HypergraphClass::Complex;
    if (indep) return HypergraphClass::Independence;
    return HypergraphClass::Neither;
}

bool is_complex(const Hypergraph& h) {
    auto c = classify(h);
    return c == HypergraphClass::Complex || c == HypergraphClass::Both;
}

bool is_independence(const Hypergraph& h) {
    auto c = classify(h);
    return c == HypergraphClass::Independence || c == HypergraphClass::Both;
}

Hypergraph complement(const Hypergraph& h) {
    require_dense_bound(h.vertex_set().size(), "complement");
    auto present = edge_bit_set(h);
    std::uint64_t all = full_mask(h.vertex_set().size());
    std::vector<Hyperedge> edges;
    edges.reserve(static_cast<std::size_t>(all) - h.edge_count());
    for (std::uint64_t m = 1; m <= all; ++m)
        if (!present.count(m)) edges.push_back(Hyperedge(m));
    return Hypergraph(h.vertex_set(), std::move(edges));
}

Hypergraph assoc_complex(const Hypergraph& h) {
    // Downward closure, output-sensitive: peel one vertex at a time.
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (Hyperedge e : h.edges())
        if (seen.insert(e.bits()).second) stack.push_back(e.bits());
    while (!stack.empty()) {
        std::uint64_t cur = stack.back();
        stack.pop_back();
        std::uint64_t b = cur;
        while (b) {
            std::uint64_t low = b & (~b + 1);
            b &= b - 1;
            std::uint64_t facet = cur & ~low;
            if (facet != 0 && seen.insert(facet).second) stack.push_back(facet);
        }
    }
    std::vector<Hyperedge> edges;
    edges.reserve(seen.size());
    for (std::uint64_t m : seen) edges.push_back(Hyperedge(m));
    return Hypergraph(h.vertex_set(), std::move(edges));
}

Hypergraph lower_complex(const Hypergraph& h) {
    // Canonical order is cardinality-ascending, so facets are decided first.
    std::unordered_set<std::uint64_t> good;
    std::vector<Hyperedge> edges;
    for (Hyperedge e : h.edges()) {
        bool ok = true;
        std::uint64_t b = e.bits();
        while (b) {
            std::uint64_t low = b & (~b + 1);
            b &= b - 1;
            std::uint64_t facet = e.bits() & ~low;
            if (facet != 0 && !good.count(facet)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            good.insert(e.bits());
            edges.push_back(e);
        }
    }
    return Hypergraph(h.vertex_set(), std::move(edges));
}

Hypergraph assoc_indep(const Hypergraph& h) {
    // Upward closure within V, output-sensitive.
    const std::size_t n = h.vertex_set().size();
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (Hyperedge e : h.edges())
        if (seen.insert(e.bits()).second) stack.push_back(e.bits());
    while (!stack.empty()) {
        std::uint64_t cur = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t parent = cur | (std::uint64_t{1} << v);
            if (parent != cur && seen.insert(parent).second) stack.push_back(parent);
        }
    }
    std::vector<Hyperedge> edges;
    edges.reserve(seen.size());
    for (std::uint64_t m : seen) edges.push_back(Hyperedge(m));
    return Hypergraph(h.vertex_set(), std::move(edges));
}

Hypergraph lower_indep(const Hypergraph& h) {
    const std::size_t n = h.vertex_set().size();
    std::unordered_set<std::uint64_t> good;
    std::vector<Hyperedge> edges;
    auto es = h.edges();
    // Reverse canonical order: supersets are decided first.
    for (auto it = es.rbegin(); it != es.rend(); ++it) {
        bool ok = true;
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t parent = it->bits() | (std::uint64_t{1} << v);
            if (parent == it->bits()) continue;
            if (!good.count(parent)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            good.insert(it->bits());
            edges.push_back(*it);
        }
    }
    return Hypergraph(h.vertex_set(), std::move(edges));
}

std::vector<Hyperedge> external_faces(const Hypergraph& complex) {
    if (!is_complex(complex))
        throw InvalidInput("external_faces requires a simplicial complex, got " +
                           std::string(to_string(classify(complex))));
    const std::size_t n = complex.vertex_set().size();
    std::unordered_set<std::uint64_t> found;
    // Singletons outside K qualify vacuously.
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t s = std::uint64_t{1} << v;
        if (!complex.contains(Hyperedge(s))) found.insert(s);
    }
    // Larger candidates are one vertex above an edge of K.
    for (Hyperedge tau : complex.edges()) {
        for (std::size_t v = 0; v < n; ++v) {
            if (tau.contains(v)) continue;
            std::uint64_t sigma = tau.bits() | (std::uint64_t{1} << v);
            if (complex.contains(Hyperedge(sigma)) || found.count(sigma)) continue;
            bool all_facets_in = true;
            std::uint64_t b = sigma;
            while (b) {
                std::uint64_t low = b & (~b + 1);
                b &= b - 1;
                std::uint64_t facet = sigma & ~low;
                if (facet != 0 && !complex.contains(Hyperedge(facet))) {
                    all_facets_in = false;
                    break;
                }
            }
            if (all_facets_in) found.insert(sigma);
        }
    }
    std::vector<Hyperedge> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) out.push_back(Hyperedge(m));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Hyperedge> co_external_faces(const Hypergraph& indep) {
    if (!is_independence(indep))
        throw InvalidInput("co_external_faces requires an independence hypergraph, got " +
                           std::string(to_string(classify(indep))));
    const std::size_t n = indep.vertex_set().size();
    const std::uint64_t full = full_mask(n);
    std::unordered_set<std::uint64_t> found;
    if (!indep.contains(Hyperedge(full))) found.insert(full);
    auto all_parents_in = [&](std::uint64_t sigma) {
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t parent = sigma | (std::uint64_t{1} << v);
            if (parent == sigma) continue;
            if (!indep.contains(Hyperedge(parent))) return false;
        }
        return true;
    };
    for (Hyperedge tau : indep.edges()) {
        for (std::size_t v : tau.positions()) {
            std::uint64_t sigma = tau.bits() & ~(std::uint64_t{1} << v);
            if (sigma == 0 || indep.contains(Hyperedge(sigma)) || found.count(sigma)) continue;
            if (all_parents_in(sigma)) found.insert(sigma);
        }
    }
    std::vector<Hyperedge> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) out.push_back(Hyperedge(m));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Hyperedge> extremal_edges(const Hypergraph& h, Extremal mode) {
    std::vector<Hyperedge> out;
    for (Hyperedge e : h.edges()) {
        bool extremal = true;
        for (Hyperedge o : h.edges()) {
            if (o == e) continue;
            if (mode == Extremal::Maximal ? e.subset_of(o) : o.subset_of(e)) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Binary operators

Hypergraph combine(const Hypergraph& a, const Hypergraph& b, SetOp op) {
    if (a.vertex_set() != b.vertex_set())
        throw InvalidInput("combine requires identical vertex sets (same labels, same order)");
    std::vector<Hyperedge> edges;
    if (op == SetOp::Intersect) {
        std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(),
                              b.edges().end(), std::back_inserter(edges), canonical_less);
    } else {
        std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(),
                       b.edges().end(), std::back_inserter(edges), canonical_less);
    }
    return Hypergraph(a.vertex_set(), std::move(edges));
}

Hypergraph join(const Hypergraph& left, const Hypergraph& right) {
    VertexSet joined = VertexSet::joined(left.vertex_set(), right.vertex_set());
    const std::size_t shift = left.vertex_set().size();
    std::vector<Hyperedge> edges;
    edges.reserve(left.edge_count() * right.edge_count() + left.edge_count() +
                  right.edge_count());
    for (Hyperedge e : left.edges()) edges.push_back(e);
    for (Hyperedge e : right.edges()) edges.push_back(Hyperedge(e.bits() << shift));
    for (Hyperedge l : left.edges())
        for (Hyperedge r : right.edges())
            edges.push_back(Hyperedge(l.bits() | (r.bits() << shift)));
    return Hypergraph(std::move(joined), std::move(edges));
}

Hypergraph box_product(const Hypergraph& left, const Hypergraph& right) {
    VertexSet pairs = VertexSet::product(left.vertex_set(), right.vertex_set());
    const std::size_t nr = right.vertex_set().size();
    std::vector<Hyperedge> edges;
    edges.reserve(left.edge_count() * right.edge_count());
    for (Hyperedge l : left.edges()) {
        for (Hyperedge r : right.edges()) {
            std::uint64_t bits = 0;
            for (std::size_t i : l.positions())
                for (std::size_t j : r.positions())
                    bits |= std::uint64_t{1} << (i * nr + j);
            edges.push_back(Hyperedge(bits));
        }
    }
    return Hypergraph(std::move(pairs), std::move(edges));
}

// ---------------------------------------------------------------------------
// Vertex maps

VertexMap::VertexMap(VertexSet domain, VertexSet codomain, std::vector<std::size_t> mapping)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), mapping_(std::move(mapping)) {
    if (mapping_.size() != domain_.size())
        throw InvalidInput("vertex map must be total on the domain");
    for (std::size_t img : mapping_)
        if (img >= codomain_.size())
            throw InvalidInput("vertex map image position outside the codomain");
}

VertexMap VertexMap::identity(const VertexSet& v) {
    std::vector<std::size_t> mapping(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mapping[i] = i;
    return VertexMap(v, v, std::move(mapping));
}

Hyperedge VertexMap::image(Hyperedge e) const {
    std::uint64_t bits = 0;
    for (std::size_t v : e.positions()) bits |= std::uint64_t{1} << mapping_.at(v);
    return Hyperedge(bits);
}

Hypergraph apply_vertex_map(const VertexMap& f, const Hypergraph& h) {
    if (f.domain() != h.vertex_set())
        throw InvalidInput("apply_vertex_map: map domain differs from the hypergraph's vertex set");
    std::vector<Hyperedge> edges;
    edges.reserve(h.edge_count());
    for (Hyperedge e : h.edges()) edges.push_back(f.image(e));
    return Hypergraph(f.codomain(), std::move(edges));
}

}  // namespace hg
