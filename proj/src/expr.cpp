#include "hg/expr.hpp"

#include <algorithm>

namespace hg {

std::string_view to_string(UnaryOp op) {
    switch (op) {
        case UnaryOp::Comp: return "comp";
        case UnaryOp::Up: return "up";
        case UnaryOp::Down: return "down";
        case UnaryOp::IUp: return "iup";
        case UnaryOp::IDown: return "idown";
    }
    return "?";
}

std::string_view to_string(BinaryOp op) {
    switch (op) {
        case BinaryOp::Intersect: return "&";
        case BinaryOp::Unite: return "|";
        case BinaryOp::Star: return "*";
        case BinaryOp::Box: return "#";
    }
    return "?";
}

std::string_view to_string(ClassBound b) {
    switch (b) {
        case ClassBound::AnyHypergraph: return "any";
        case ClassBound::Complex: return "complex";
        case ClassBound::Independence: return "independence";
    }
    return "?";
}

struct Expr::Node {
    Kind kind;
    std::size_t slot = 0;
    UnaryOp uop = UnaryOp::Comp;
    BinaryOp bop = BinaryOp::Intersect;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t leaf_count = 0;
};

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::leaf(std::size_t slot) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->slot = slot;
    n->leaf_count = 1;
    return Expr(std::move(n));
}

Expr Expr::unary(UnaryOp op, Expr child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unary;
    n->uop = op;
    n->left = child.node_;
    n->leaf_count = child.node_->leaf_count;
    return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Binary;
    n->bop = op;
    n->left = left.node_;
    n->right = right.node_;
    n->leaf_count = left.node_->leaf_count + right.node_->leaf_count;
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
std::size_t Expr::slot() const { return node_->slot; }
UnaryOp Expr::unary_op() const { return node_->uop; }
BinaryOp Expr::binary_op() const { return node_->bop; }
std::size_t Expr::leaf_count() const noexcept { return node_->leaf_count; }

Expr Expr::child() const { return Expr(node_->left); }
Expr Expr::left() const { return Expr(node_->left); }
Expr Expr::right() const { return Expr(node_->right); }

bool Expr::operator==(const Expr& other) const {
    const Node* a = node_.get();
    const Node* b = other.node_.get();
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Leaf: return a->slot == b->slot;
        case Kind::Unary: return a->uop == b->uop && child() == other.child();
        case Kind::Binary:
            return a->bop == b->bop && left() == other.left() && right() == other.right();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr int kMaxParseDepth = 1000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = parse_expr(0);
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Expr parse_expr(int depth) {
        if (depth > kMaxParseDepth) throw ParseError("expression nests too deeply", pos_);
        Expr acc = parse_term(depth);
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            BinaryOp op;
            if (c == '&') op = BinaryOp::Intersect;
            else if (c == '|') op = BinaryOp::Unite;
            else if (c == '*') op = BinaryOp::Star;
            else if (c == '#') op = BinaryOp::Box;
            else break;
            ++pos_;
            acc = Expr::binary(op, std::move(acc), parse_term(depth));
        }
        return acc;
    }

    Expr parse_term(int depth) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected a term", pos_);
        char c = text_[pos_];
        if (c == '$') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) throw ParseError("expected digits after '$'", pos_);
            std::size_t slot = 0;
            for (std::size_t i = start; i < pos_; ++i)
                slot = slot * 10 + static_cast<std::size_t>(text_[i] - '0');
            return Expr::leaf(slot);
        }
        if (c == '(') {
            ++pos_;
            Expr e = parse_expr(depth + 1);
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            UnaryOp op;
            if (name == "comp") op = UnaryOp::Comp;
            else if (name == "up") op = UnaryOp::Up;
            else if (name == "down") op = UnaryOp::Down;
            else if (name == "iup") op = UnaryOp::IUp;
            else if (name == "idown") op = UnaryOp::IDown;
            else throw ParseError("unknown operator name '" + std::string(name) + "'", start);
            expect('(');
            Expr e = parse_expr(depth + 1);
            expect(')');
            return Expr::unary(op, std::move(e));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void collect_slots(const Expr& e, std::vector<std::size_t>& slots) {
    switch (e.kind()) {
        case Expr::Kind::Leaf: slots.push_back(e.slot()); break;
        case Expr::Kind::Unary: collect_slots(e.child(), slots); break;
        case Expr::Kind::Binary:
            collect_slots(e.left(), slots);
            collect_slots(e.right(), slots);
            break;
    }
}

void check_slots(const Expr& e) {
    std::vector<std::size_t> slots;
    collect_slots(e, slots);
    std::sort(slots.begin(), slots.end());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] != i)
            throw ParseError("leaf slots must be distinct and contiguous from $0 (slot $" +
                                 std::to_string(slots[i]) +
                                 (i > 0 && slots[i] == slots[i - 1] ? " repeats)" : " leaves a gap)"),
                             0);
    }
}

}  // namespace

Expr parse_expr(std::string_view text) {
    Expr e = Parser(text).parse();
    check_slots(e);
    return e;
}

std::string render(const Expr& e, bool compact) {
    switch (e.kind()) {
        case Expr::Kind::Leaf:
            return "$" + std::to_string(e.slot());
        case Expr::Kind::Unary:
            return std::string(to_string(e.unary_op())) + "(" + render(e.child(), compact) + ")";
        case Expr::Kind::Binary: {
            // One precedence level, left-associative: only right-hand binary
            // children need parentheses.
            std::string l = render(e.left(), compact);
            std::string r = render(e.right(), compact);
            if (e.right().kind() == Expr::Kind::Binary) r = "(" + r + ")";
            std::string op(to_string(e.binary_op()));
            return compact ? l + op + r : l + " " + op + " " + r;
        }
    }
    throw Error("unreachable expr kind");
}

// ---------------------------------------------------------------------------
// Signatures and evaluation

namespace {

struct NodeSig {
    VertexSet vertices;
    ClassBound bound;
};

NodeSig infer(const Expr& e, std::span<const VertexSet> leaf_sets) {
    switch (e.kind()) {
        case Expr::Kind::Leaf:
            return {leaf_sets[e.slot()], ClassBound::AnyHypergraph};
        case Expr::Kind::Unary: {
            NodeSig c = infer(e.child(), leaf_sets);
            switch (e.unary_op()) {
                case UnaryOp::Comp:
                    if (c.bound == ClassBound::Complex) c.bound = ClassBound::Independence;
                    else if (c.bound == ClassBound::Independence) c.bound = ClassBound::Complex;
                    return c;
                case UnaryOp::Up:
                case UnaryOp::Down:
                    c.bound = ClassBound::Complex;
                    return c;
                case UnaryOp::IUp:
                case UnaryOp::IDown:
                    c.bound = ClassBound::Independence;
                    return c;
            }
            throw Error("unreachable unary op");
        }
        case Expr::Kind::Binary: {
            NodeSig l = infer(e.left(), leaf_sets);
            NodeSig r = infer(e.right(), leaf_sets);
            switch (e.binary_op()) {
                case BinaryOp::Intersect:
                case BinaryOp::Unite:
                    if (l.vertices != r.vertices)
                        throw InvalidInput(
                            "'&'/'|' need identical vertex sets on both sides");
                    return {l.vertices,
                            l.bound == r.bound ? l.bound : ClassBound::AnyHypergraph};
                case BinaryOp::Star: {
                    VertexSet joined = VertexSet::joined(l.vertices, r.vertices);
                    // Joins of complexes are complexes; joins of independence
                    // hypergraphs are NOT independence hypergraphs in general
                    // (a pure left edge is missing its mixed supersets).
                    ClassBound b = (l.bound == ClassBound::Complex &&
                                    r.bound == ClassBound::Complex)
                                       ? ClassBound::Complex
                                       : ClassBound::AnyHypergraph;
                    return {std::move(joined), b};
                }
                case BinaryOp::Box:
                    return {VertexSet::product(l.vertices, r.vertices),
                            ClassBound::AnyHypergraph};
            }
            throw Error("unreachable binary op");
        }
    }
    throw Error("unreachable expr kind");
}

}  // namespace

Signature infer_signature(const Expr& e, std::span<const VertexSet> leaf_sets) {
    if (leaf_sets.size() != e.leaf_count())
        throw InvalidInput("expression has " + std::to_string(e.leaf_count()) +
                           " leaves but " + std::to_string(leaf_sets.size()) +
                           " vertex sets were supplied");
    NodeSig s = infer(e, leaf_sets);
    Signature out;
    out.leaf_vertex_sets.assign(leaf_sets.begin(), leaf_sets.end());
    out.result_vertex_set = std::move(s.vertices);
    out.result_class_bound = s.bound;
    return out;
}

Hypergraph apply_unary(UnaryOp op, const Hypergraph& h) {
    switch (op) {
        case UnaryOp::Comp: return complement(h);
        case UnaryOp::Up: return assoc_complex(h);
        case UnaryOp::Down: return lower_complex(h);
        case UnaryOp::IUp: return assoc_indep(h);
        case UnaryOp::IDown: return lower_indep(h);
    }
    throw Error("unreachable unary op");
}

Hypergraph apply_binary(BinaryOp op, const Hypergraph& a, const Hypergraph& b) {
    switch (op) {
        case BinaryOp::Intersect: return combine(a, b, SetOp::Intersect);
        case BinaryOp::Unite: return combine(a, b, SetOp::Unite);
        case BinaryOp::Star: return join(a, b);
        case BinaryOp::Box: return box_product(a, b);
    }
    throw Error("unreachable binary op");
}

namespace {

Hypergraph eval(const Expr& e, std::span<const Hypergraph> inputs) {
    switch (e.kind()) {
        case Expr::Kind::Leaf: return inputs[e.slot()];
        case Expr::Kind::Unary: return apply_unary(e.unary_op(), eval(e.child(), inputs));
        case Expr::Kind::Binary:
            return apply_binary(e.binary_op(), eval(e.left(), inputs),
                                eval(e.right(), inputs));
    }
    throw Error("unreachable expr kind");
}

}  // namespace

Hypergraph eval_expr(const Expr& e, std::span<const Hypergraph> inputs) {
    std::vector<VertexSet> leaf_sets;
    leaf_sets.reserve(inputs.size());
    for (const Hypergraph& h : inputs) leaf_sets.push_back(h.vertex_set());
    infer_signature(e, leaf_sets);  // admissibility gate
    return eval(e, inputs);
}

}  // namespace hg
