#pragma once

#include <optional>
#include <vector>

#include "ufe/moves.hpp"
#include "ufe/solution_array.hpp"

namespace ufe {

/// One priority reduction: child == apply(parent, app).
struct ReductionStep {
  MoveApplication app;
  SolutionArray parent;
  SolutionArray child;
};

/// The reduction chosen by the fixed priority order, all editing the top
/// nonzero row beta:
///   1. Move 1 (right pair) on row beta if c_{2,beta} >= 2
///   2. Move 1 (left pair) on row beta if c_{1,beta} >= 2
///   3..6. Moves 2, 3, 4, 5 on rows (beta-1, beta), when defined for k
///
/// Returns std::nullopt for the root [[1,0,0]], which has no parent. Throws
/// IrreducibleError if nothing applies to any other array; for solution
/// arrays that cannot happen.
std::optional<ReductionStep> priority_reduction(const SolutionArray& array);

/// Only the chosen application, without materialising the child.
std::optional<MoveApplication> priority_reduction_move(const SolutionArray& array);

/// Priority reductions from `array` down to the root. Throws
/// NotASolutionError if the array does not sum to 1.
std::vector<ReductionStep> reduction_chain(const SolutionArray& array);

/// Every child C obtained by expanding `array` under `move` such that the
/// priority reduction of C is exactly the inverse of that expansion.
///
/// Empty if the move is not defined for k.
std::vector<SolutionArray> priority_expansions(const SolutionArray& array, MoveId move);

}  // namespace ufe
