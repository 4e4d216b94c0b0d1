#include "hg/pushforward.hpp"

namespace hg {

namespace {

DistributionTable push(const Expr& e, std::span<const DistributionTable> leaves) {
    switch (e.kind()) {
        case Expr::Kind::Leaf:
            return leaves[e.slot()];
        case Expr::Kind::Unary: {
            DistributionTable in = push(e.child(), leaves);
            EdgeIndex index(in.vertex_set());
            std::vector<double> out(index.state_count(), 0.0);
            for (std::uint64_t i = 0; i < in.size(); ++i) {
                double m = in.masses()[i];
                if (m == 0.0) continue;
                Hypergraph image = apply_unary(e.unary_op(), index.to_hypergraph(i));
                out[index.to_mask(image)] += m;
            }
            return DistributionTable(in.vertex_set(), std::move(out));
        }
        case Expr::Kind::Binary: {
            DistributionTable a = push(e.left(), leaves);
            DistributionTable b = push(e.right(), leaves);
            EdgeIndex ia(a.vertex_set());
            EdgeIndex ib(b.vertex_set());
            // Resolve the output vertex set (and admissibility) up front.
            std::vector<VertexSet> sides{a.vertex_set(), b.vertex_set()};
            Expr pair = Expr::binary(e.binary_op(), Expr::leaf(0), Expr::leaf(1));
            EdgeIndex io(infer_signature(pair, sides).result_vertex_set);
            std::vector<double> out(io.state_count(), 0.0);
            for (std::uint64_t i = 0; i < a.size(); ++i) {
                double ma = a.masses()[i];
                if (ma == 0.0) continue;
                Hypergraph ha = ia.to_hypergraph(i);
                for (std::uint64_t j = 0; j < b.size(); ++j) {
                    double mb = b.masses()[j];
                    if (mb == 0.0) continue;
                    Hypergraph image = apply_binary(e.binary_op(), ha, ib.to_hypergraph(j));
                    out[io.to_mask(image)] += ma * mb;
                }
            }
            return DistributionTable(io.vertex_set(), std::move(out));
        }
    }
    throw Error("unreachable expr kind");
}

}  // namespace

DistributionTable pushforward_expr(const Expr& e,
                                   std::span<const DistributionTable> leaf_tables) {
    if (leaf_tables.size() != e.leaf_count())
        throw InvalidInput("expression has " + std::to_string(e.leaf_count()) +
                           " leaves but " + std::to_string(leaf_tables.size()) +
                           " tables were supplied");
    std::vector<VertexSet> leaf_sets;
    leaf_sets.reserve(leaf_tables.size());
    for (const auto& t : leaf_tables) leaf_sets.push_back(t.vertex_set());
    infer_signature(e, leaf_sets);  // admissibility and bound checks
    return push(e, leaf_tables);
}

}  // namespace hg
