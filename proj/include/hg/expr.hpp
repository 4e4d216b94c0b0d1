#pragma once

// Expression language over hypergraph operators.
//
//   expr  := term {binop term}
//   term  := leaf | unary "(" expr ")" | "(" expr ")"
//   leaf  := "$" digits
//   unary := "comp" | "up" | "down" | "iup" | "idown"
//   binop := "&" | "|" | "*" | "#"
//
// All binary operators share one precedence level and associate left;
// parentheses override.  Leaf slots must be distinct and contiguous from $0.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hg/core.hpp"

namespace hg {

enum class UnaryOp { Comp, Up, Down, IUp, IDown };
enum class BinaryOp { Intersect, Unite, Star, Box };

std::string_view to_string(UnaryOp op);
std::string_view to_string(BinaryOp op);

/// Immutable expression tree.  Copies are cheap (shared structure).
class Expr {
public:
    enum class Kind { Leaf, Unary, Binary };

    static Expr leaf(std::size_t slot);
    static Expr unary(UnaryOp op, Expr child);
    static Expr binary(BinaryOp op, Expr left, Expr right);

    Kind kind() const noexcept;
    std::size_t slot() const;          // Leaf
    UnaryOp unary_op() const;          // Unary
    Expr child() const;                // Unary
    BinaryOp binary_op() const;        // Binary
    Expr left() const;                 // Binary
    Expr right() const;                // Binary

    /// Number of leaves; slot indices run 0..leaf_count()-1.
    std::size_t leaf_count() const noexcept;

    bool operator==(const Expr& other) const;  // structural

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

Expr parse_expr(std::string_view text);

/// `compact` drops the spaces around binary operators.
std::string render(const Expr& e, bool compact = false);

enum class ClassBound { AnyHypergraph, Complex, Independence };
std::string_view to_string(ClassBound b);

/// Result of admissibility checking: vertex sets compose, and the output is
/// guaranteed to lie in the bound class.
struct Signature {
    std::vector<VertexSet> leaf_vertex_sets;
    VertexSet result_vertex_set;
    ClassBound result_class_bound;
};

/// Bottom-up vertex-set and class inference.  Throws InvalidInput when a
/// binary operation is inadmissible (&,| need equal vertex sets; * needs
/// label-disjoint ones).
Signature infer_signature(const Expr& e, std::span<const VertexSet> leaf_sets);

Hypergraph apply_unary(UnaryOp op, const Hypergraph& h);
Hypergraph apply_binary(BinaryOp op, const Hypergraph& a, const Hypergraph& b);

/// Bottom-up evaluation; checks admissibility first.
Hypergraph eval_expr(const Expr& e, std::span<const Hypergraph> inputs);

}  // namespace hg
