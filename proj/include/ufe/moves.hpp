#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ufe/solution_array.hpp"

namespace ufe {

enum class MoveId : std::uint8_t { M1 = 1, M2 = 2, M3 = 3, M4 = 4, M5 = 5 };

enum class Direction : std::uint8_t { Reduction, Expansion };

/// Which adjacent columns Move 1 touches: Left = (a=0, a=1), Right = (a=1, a=2).
enum class ColumnPair : std::uint8_t { Left, Right };

/// One fully determined rewrite.
///
/// For M1, `row` is the row being edited and `columns` picks the cell pair.
/// For M2..M5, `row` is the lower row b of the pair (b, b+1) and `columns` is
/// ignored.
struct MoveApplication {
  MoveId move = MoveId::M1;
  Direction direction = Direction::Reduction;
  std::size_t row = 0;
  ColumnPair columns = ColumnPair::Left;

  MoveApplication inverse() const;

  friend bool operator==(const MoveApplication&, const MoveApplication&) = default;
};

/// Whether the move has a variant for this residue class. M3 and M5 need odd
/// k; M4 needs k not divisible by 4; M1 and M2 always exist.
bool move_defined(MoveId move, const Base& base);

/// Decrease in the number of terms when the move is applied as a reduction.
/// Throws MoveUndefinedError when !move_defined(move, base).
Count move_delta(MoveId move, const Base& base);

/// The two sides of a move's rule as applied at a given position: reduction
/// removes `upper` (on row `upper_row`) and adds `lower` (on row `lower_row`);
/// expansion does the opposite. For M1 both rows coincide.
struct MoveRule {
  std::size_t upper_row;
  Row upper;
  std::size_t lower_row;
  Row lower;
};

MoveRule move_rule(const MoveApplication& app, const Base& base);

/// True iff the side of the rule that `app` consumes is present in `array`.
/// Works for both directions. Throws MoveUndefinedError for undefined moves.
bool applicable(const SolutionArray& array, const MoveApplication& app);

/// Same as applicable(); `app.direction` must be Reduction.
bool reduction_applicable(const SolutionArray& array, const MoveApplication& app);

/// Applies the rewrite and returns the canonical result. Throws
/// NotApplicableError naming the first entry that would go negative.
SolutionArray apply(const SolutionArray& array, const MoveApplication& app);

int move_number(MoveId move);
std::string to_string(const MoveApplication& app);

}  // namespace ufe
