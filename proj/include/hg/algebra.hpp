#pragma once

// Sampling through expressions, and the three staged generation pipelines:
// per-block unary words over independently sampled leaves, &/| folds inside
// a block, */# folds across blocks, and (for the hypergraph kind) a final
// unary word.

#include <optional>
#include <vector>

#include "hg/expr.hpp"
#include "hg/prob.hpp"
#include "hg/sampler.hpp"

namespace hg {

/// Draw every leaf independently (slot order) and evaluate the expression.
SampledObject sample_expr(const Expr& e, std::span<const ProbabilityMap> leaf_maps,
                          SampleStream& stream);

/// Composition chain of unary operators, outermost first:
/// {Comp, Up} applied to x is comp(up(x)).  Empty word = identity.
using UnaryWord = std::vector<UnaryOp>;

enum class PipelineKind { Hypergraph, Complex, Independence };

/// One vertex block: n leaves, each wrapped in its own unary word, folded
/// left-to-right with the &/| schedule.  For the Complex (Independence)
/// kind each leaf additionally passes through the mandated up/down
/// (iup/idown) closure after its word.
struct PipelineBlock {
    VertexSet vertices;
    std::vector<UnaryWord> leaf_words;          // size n_i (may hold empty words)
    std::vector<UnaryOp> leaf_closures;         // Complex/Independence kinds: size n_i
    std::vector<BinaryOp> fold_ops;             // size n_i - 1, Intersect/Unite only
};

/// Cross-block step: Star, or Box wrapped in a closure for the closed kinds.
/// For the Independence kind Star is wrapped as well (plain joins do not
/// preserve superset-closure).
struct CrossStep {
    BinaryOp op;                                // Star or Box
    std::optional<UnaryOp> closure;             // wrap for closed kinds
};

struct PipelineConfig {
    PipelineKind kind;
    std::vector<PipelineBlock> blocks;          // k >= 1
    std::vector<CrossStep> cross_steps;         // size k - 1
    UnaryWord final_word;                       // Hypergraph kind only
};

/// Assemble the expression realizing a pipeline.  Slots are numbered in
/// block order.  The result's class bound matches the kind for Complex and
/// Independence configs.
Expr build_pipeline(const PipelineConfig& cfg);

/// Vertex sets for the pipeline's slots, in order.
std::vector<VertexSet> pipeline_leaf_sets(const PipelineConfig& cfg);

/// Fill a config with uniform seeded choices: k blocks of one to
/// `max_leaves` leaves over disjoint vertex sets of one to `max_vertices`
/// labels.  The running vertex-set size is capped at 12 (a box step that
/// would exceed it degrades to a join) so closures stay desk-scale.
PipelineConfig random_pipeline_config(PipelineKind kind, std::uint64_t seed,
                                      std::size_t max_blocks = 3,
                                      std::size_t max_leaves = 3,
                                      std::size_t max_vertices = 3);

}  // namespace hg
