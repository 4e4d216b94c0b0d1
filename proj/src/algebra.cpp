#include "hg/algebra.hpp"

#include <algorithm>

namespace hg {

SampledObject sample_expr(const Expr& e, std::span<const ProbabilityMap> leaf_maps,
                          SampleStream& stream) {
    if (leaf_maps.size() != e.leaf_count())
        throw InvalidInput("expression has " + std::to_string(e.leaf_count()) +
                           " leaves but " + std::to_string(leaf_maps.size()) +
                           " probability maps were supplied");
    std::vector<VertexSet> leaf_sets;
    leaf_sets.reserve(leaf_maps.size());
    for (const auto& m : leaf_maps) leaf_sets.push_back(m.vertex_set());
    infer_signature(e, leaf_sets);

    std::vector<Hypergraph> draws;
    draws.reserve(leaf_maps.size());
    for (const auto& m : leaf_maps) draws.push_back(sample_hypergraph(m, stream));
    Hypergraph result = eval_expr(e, draws);

    std::string desc = render(e, /*compact=*/true) + "|";
    for (std::size_t i = 0; i < leaf_maps.size(); ++i) {
        if (i) desc.push_back(';');
        desc += leaf_maps[i].description();
    }
    desc += "|seed=" + std::to_string(stream.seed());
    VertexSet vs = result.vertex_set();
    return SampledObject{std::move(vs), std::move(result), std::move(desc)};
}

namespace {

Expr apply_word(const UnaryWord& word, Expr e) {
    // Outermost-first storage: apply in reverse to build inside-out.
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = Expr::unary(*it, std::move(e));
    return e;
}

void validate(const PipelineConfig& cfg) {
    if (cfg.blocks.empty()) throw InvalidInput("pipeline needs at least one block");
    if (cfg.cross_steps.size() + 1 != cfg.blocks.size())
        throw InvalidInput("pipeline needs exactly k-1 cross steps");
    const bool closed = cfg.kind != PipelineKind::Hypergraph;
    for (const auto& block : cfg.blocks) {
        const std::size_t n = block.leaf_words.size();
        if (n == 0) throw InvalidInput("pipeline block needs at least one leaf");
        if (block.fold_ops.size() + 1 != n)
            throw InvalidInput("pipeline block needs exactly n-1 fold ops");
        for (BinaryOp op : block.fold_ops)
            if (op != BinaryOp::Intersect && op != BinaryOp::Unite)
                throw InvalidInput("block folds may only use '&' or '|'");
        if (closed) {
            if (block.leaf_closures.size() != n)
                throw InvalidInput("closed-kind blocks need one closure per leaf");
            for (UnaryOp c : block.leaf_closures) {
                bool ok = cfg.kind == PipelineKind::Complex
                              ? (c == UnaryOp::Up || c == UnaryOp::Down)
                              : (c == UnaryOp::IUp || c == UnaryOp::IDown);
                if (!ok) throw InvalidInput("leaf closure does not match the pipeline kind");
            }
        } else if (!block.leaf_closures.empty()) {
            throw InvalidInput("hypergraph-kind blocks take no leaf closures");
        }
    }
    for (const auto& step : cfg.cross_steps) {
        if (step.op != BinaryOp::Star && step.op != BinaryOp::Box)
            throw InvalidInput("cross steps may only use '*' or '#'");
        if (!closed) {
            if (step.closure) throw InvalidInput("hypergraph-kind cross steps take no closure");
            continue;
        }
        if (!step.closure)
            throw InvalidInput("closed-kind cross steps need a closure wrap");
        bool ok = cfg.kind == PipelineKind::Complex
                      ? (*step.closure == UnaryOp::Up || *step.closure == UnaryOp::Down)
                      : (*step.closure == UnaryOp::IUp || *step.closure == UnaryOp::IDown);
        if (!ok) throw InvalidInput("cross-step closure does not match the pipeline kind");
    }
    if (closed && !cfg.final_word.empty())
        throw InvalidInput("only hypergraph-kind pipelines take a final word");
}

}  // namespace

Expr build_pipeline(const PipelineConfig& cfg) {
    validate(cfg);
    std::size_t slot = 0;
    std::vector<Expr> block_exprs;
    block_exprs.reserve(cfg.blocks.size());
    const bool closed = cfg.kind != PipelineKind::Hypergraph;
    for (const auto& block : cfg.blocks) {
        std::vector<Expr> items;
        items.reserve(block.leaf_words.size());
        for (std::size_t j = 0; j < block.leaf_words.size(); ++j) {
            Expr item = apply_word(block.leaf_words[j], Expr::leaf(slot++));
            if (closed) item = Expr::unary(block.leaf_closures[j], std::move(item));
            items.push_back(std::move(item));
        }
        Expr acc = items[0];
        for (std::size_t j = 1; j < items.size(); ++j)
            acc = Expr::binary(block.fold_ops[j - 1], std::move(acc), items[j]);
        block_exprs.push_back(std::move(acc));
    }
    Expr acc = block_exprs[0];
    for (std::size_t i = 1; i < block_exprs.size(); ++i) {
        const CrossStep& step = cfg.cross_steps[i - 1];
        acc = Expr::binary(step.op, std::move(acc), block_exprs[i]);
        if (step.closure) acc = Expr::unary(*step.closure, std::move(acc));
    }
    return apply_word(cfg.final_word, std::move(acc));
}

std::vector<VertexSet> pipeline_leaf_sets(const PipelineConfig& cfg) {
    std::vector<VertexSet> out;
    for (const auto& block : cfg.blocks)
        for (std::size_t j = 0; j < block.leaf_words.size(); ++j)
            out.push_back(block.vertices);
    return out;
}

PipelineConfig random_pipeline_config(PipelineKind kind, std::uint64_t seed,
                                      std::size_t max_blocks, std::size_t max_leaves,
                                      std::size_t max_vertices) {
    constexpr std::size_t kVertexBudget = 12;
    SampleStream stream(seed);
    auto pick = [&stream](std::size_t n) {  // uniform on 0..n-1
        return std::min<std::size_t>(n - 1, static_cast<std::size_t>(stream.uniform() * n));
    };
    const bool closed = kind != PipelineKind::Hypergraph;

    PipelineConfig cfg;
    cfg.kind = kind;
    std::size_t k = 1 + pick(max_blocks);
    std::size_t label_counter = 0;
    for (std::size_t i = 0; i < k; ++i) {
        PipelineBlock block;
        std::size_t nv = 1 + pick(max_vertices);
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < nv; ++v)
            labels.push_back("x" + std::to_string(label_counter++));
        block.vertices = VertexSet(std::move(labels));
        std::size_t n = 1 + pick(max_leaves);
        for (std::size_t j = 0; j < n; ++j) {
            UnaryWord word;
            std::size_t len = pick(3);  // 0..2 operators
            for (std::size_t w = 0; w < len; ++w)
                word.push_back(static_cast<UnaryOp>(pick(5)));
            block.leaf_words.push_back(std::move(word));
            if (closed) {
                UnaryOp up = kind == PipelineKind::Complex ? UnaryOp::Up : UnaryOp::IUp;
                UnaryOp down = kind == PipelineKind::Complex ? UnaryOp::Down : UnaryOp::IDown;
                block.leaf_closures.push_back(pick(2) ? up : down);
            }
        }
        for (std::size_t j = 0; j + 1 < n; ++j)
            block.fold_ops.push_back(pick(2) ? BinaryOp::Intersect : BinaryOp::Unite);
        cfg.blocks.push_back(std::move(block));
    }
    std::size_t running = cfg.blocks[0].vertices.size();
    for (std::size_t i = 1; i < k; ++i) {
        std::size_t next = cfg.blocks[i].vertices.size();
        bool box = pick(2) == 1 && running * next <= kVertexBudget;
        CrossStep step;
        step.op = box ? BinaryOp::Box : BinaryOp::Star;
        running = box ? running * next : running + next;
        if (closed) {
            UnaryOp up = kind == PipelineKind::Complex ? UnaryOp::Up : UnaryOp::IUp;
            UnaryOp down = kind == PipelineKind::Complex ? UnaryOp::Down : UnaryOp::IDown;
            step.closure = pick(2) ? up : down;
        }
        cfg.cross_steps.push_back(step);
    }
    if (!closed) {
        std::size_t len = pick(3);
        for (std::size_t w = 0; w < len; ++w)
            cfg.final_word.push_back(static_cast<UnaryOp>(pick(5)));
    }
    return cfg;
}

}  // namespace hg
