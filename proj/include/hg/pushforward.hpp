#pragma once

// Exact image laws of expressions: unary nodes push mass through the
// operator ((Df)(phi)(H) = sum over the fiber), binary nodes convolve the
// two input laws over the operation.  Every intermediate vertex set must
// satisfy the dense-table bound.

#include <span>

#include "hg/dist_table.hpp"
#include "hg/expr.hpp"

namespace hg {

/// Distribution of eval_expr(e, inputs) when the inputs are independent with
/// the given laws.  leaf_tables are matched to slots by position.
DistributionTable pushforward_expr(const Expr& e, std::span<const DistributionTable> leaf_tables);

}  // namespace hg
