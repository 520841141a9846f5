#include "ufe/priority.hpp"

#include "ufe/errors.hpp"

namespace ufe {
namespace {

constexpr MoveId kTwoRowMoves[] = {MoveId::M2, MoveId::M3, MoveId::M4, MoveId::M5};

}  // namespace

std::optional<MoveApplication> priority_reduction_move(const SolutionArray& array) {
  if (array == SolutionArray::trivial(array.base())) return std::nullopt;
  const std::size_t beta = top_nonzero_row(array);
  const Base& base = array.base();

  if (array.at(2, beta) >= 2) {
    return MoveApplication{MoveId::M1, Direction::Reduction, beta, ColumnPair::Right};
  }
  if (array.at(1, beta) >= 2) {
    return MoveApplication{MoveId::M1, Direction::Reduction, beta, ColumnPair::Left};
  }
  if (beta >= 1) {
    for (MoveId move : kTwoRowMoves) {
      if (!move_defined(move, base)) continue;
      MoveApplication app{move, Direction::Reduction, beta - 1, ColumnPair::Left};
      if (applicable(array, app)) return app;
    }
  }
  throw IrreducibleError("no priority reduction applies to " + to_string(array));
}

std::optional<ReductionStep> priority_reduction(const SolutionArray& array) {
  std::optional<MoveApplication> app = priority_reduction_move(array);
  if (!app) return std::nullopt;
  return ReductionStep{*app, array, apply(array, *app)};
}

std::vector<ReductionStep> reduction_chain(const SolutionArray& array) {
  if (!is_solution(array)) {
    throw NotASolutionError(to_string(array) + " sums to " + sum_value(array).str() +
                            ", not 1");
  }
  std::vector<ReductionStep> chain;
  SolutionArray current = array;
  // Every reduction removes at least one term, so this loop is bounded by n.
  while (auto step = priority_reduction(current)) {
    current = step->child;
    chain.push_back(std::move(*step));
  }
  return chain;
}

std::vector<SolutionArray> priority_expansions(const SolutionArray& array, MoveId move) {
  std::vector<SolutionArray> out;
  const Base& base = array.base();
  if (!move_defined(move, base) || array.is_empty()) return out;

  // A priority reduction always edits the top nonzero row of its input. An
  // expansion of `array` leaves that row at beta or lifts it to beta+1, so
  // the only candidate positions are M1 on row beta and M2..M5 on the pairs
  // (beta-1, beta) and (beta, beta+1).
  const std::size_t beta = top_nonzero_row(array);
  std::vector<MoveApplication> candidates;
  if (move == MoveId::M1) {
    candidates.push_back({move, Direction::Expansion, beta, ColumnPair::Left});
    candidates.push_back({move, Direction::Expansion, beta, ColumnPair::Right});
  } else {
    if (beta >= 1) candidates.push_back({move, Direction::Expansion, beta - 1, ColumnPair::Left});
    candidates.push_back({move, Direction::Expansion, beta, ColumnPair::Left});
  }

  for (const MoveApplication& app : candidates) {
    if (!applicable(array, app)) continue;
    SolutionArray child = apply(array, app);
    std::optional<MoveApplication> back = priority_reduction_move(child);
    if (back && *back == app.inverse()) out.push_back(std::move(child));
  }
  return out;
}

}  // namespace ufe
