#include "ufe/moves.hpp"

#include <sstream>

#include "ufe/errors.hpp"

namespace ufe {
namespace {

// Row-(b+1) side of the M2..M5 rules, read off the displayed two-row rules.
// The row-b side is returned through `lower`.
Row upper_side(MoveId move, const Base& base, Row& lower) {
  const Count k = base.k();
  switch (move) {
    case MoveId::M2:
      switch (base.residue()) {
        case ResidueClass::R0:
          lower = {0, 0, 1};
          return {k / 4, 0, 0};
        case ResidueClass::R2:
          lower = {0, 1, 0};
          return {k / 2, 0, 0};
        default:
          lower = {1, 0, 0};
          return {k, 0, 0};
      }
    case MoveId::M3:
      if (base.residue() == ResidueClass::R1) {
        lower = {0, 0, 1};
        return {(k - 1) / 4, 0, 1};
      }
      lower = {0, 1, 1};
      return {(3 * k - 1) / 4, 0, 1};
    case MoveId::M4:
      if (base.residue() == ResidueClass::R2) {
        lower = {0, 0, 1};
        return {(k - 2) / 4, 1, 0};
      }
      lower = {0, 1, 0};
      return {(k - 1) / 2, 1, 0};
    case MoveId::M5:
      if (base.residue() == ResidueClass::R1) {
        lower = {0, 1, 1};
        return {(3 * k - 3) / 4, 1, 1};
      }
      lower = {0, 0, 1};
      return {(k - 3) / 4, 1, 1};
    case MoveId::M1:
      break;
  }
  throw Error("upper_side called for Move 1");
}

void require_defined(MoveId move, const Base& base) {
  if (!move_defined(move, base)) {
    throw MoveUndefinedError("Move " + std::to_string(move_number(move)) +
                             " is not defined for k = " + std::to_string(base.k()));
  }
}

Count row_sum(const Row& r) { return r[0] + r[1] + r[2]; }

}  // namespace

MoveApplication MoveApplication::inverse() const {
  MoveApplication out = *this;
  out.direction = direction == Direction::Reduction ? Direction::Expansion : Direction::Reduction;
  return out;
}

bool move_defined(MoveId move, const Base& base) {
  switch (move) {
    case MoveId::M1:
    case MoveId::M2:
      return true;
    case MoveId::M3:
    case MoveId::M5:
      return base.is_odd();
    case MoveId::M4:
      return base.residue() != ResidueClass::R0;
  }
  return false;
}

MoveRule move_rule(const MoveApplication& app, const Base& base) {
  require_defined(app.move, base);
  if (app.move == MoveId::M1) {
    // (x, y+2) <-> (x+1, y) on an adjacent column pair of one row.
    Row upper{0, 0, 0};
    Row lower{0, 0, 0};
    const std::size_t left = app.columns == ColumnPair::Left ? 0 : 1;
    upper[left + 1] = 2;
    lower[left] = 1;
    return {app.row, upper, app.row, lower};
  }
  Row lower{};
  Row upper = upper_side(app.move, base, lower);
  return {app.row + 1, upper, app.row, lower};
}

Count move_delta(MoveId move, const Base& base) {
  MoveRule rule = move_rule({move, Direction::Reduction, 0, ColumnPair::Left}, base);
  return row_sum(rule.upper) - row_sum(rule.lower);
}

bool applicable(const SolutionArray& array, const MoveApplication& app) {
  const MoveRule rule = move_rule(app, array.base());
  const bool reducing = app.direction == Direction::Reduction;
  const Row& consumed = reducing ? rule.upper : rule.lower;
  const std::size_t row = reducing ? rule.upper_row : rule.lower_row;
  for (std::size_t a = 0; a < 3; ++a) {
    if (array.at(a, row) < consumed[a]) return false;
  }
  return true;
}

bool reduction_applicable(const SolutionArray& array, const MoveApplication& app) {
  if (app.direction != Direction::Reduction) {
    throw Error("reduction_applicable requires a reduction");
  }
  return applicable(array, app);
}

SolutionArray apply(const SolutionArray& array, const MoveApplication& app) {
  const MoveRule rule = move_rule(app, array.base());
  const bool reducing = app.direction == Direction::Reduction;
  const Row& consumed = reducing ? rule.upper : rule.lower;
  const Row& produced = reducing ? rule.lower : rule.upper;
  const std::size_t from = reducing ? rule.upper_row : rule.lower_row;
  const std::size_t to = reducing ? rule.lower_row : rule.upper_row;

  std::vector<Row> rows = array.rows();
  if (rows.size() <= std::max(from, to)) rows.resize(std::max(from, to) + 1, Row{0, 0, 0});
  for (std::size_t a = 0; a < 3; ++a) {
    if (rows[from][a] < consumed[a]) {
      throw NotApplicableError(to_string(app) + ": needs c_{" + std::to_string(a) + "," +
                               std::to_string(from) + "} >= " + std::to_string(consumed[a]) +
                               ", have " + std::to_string(rows[from][a]));
    }
    rows[from][a] -= consumed[a];
  }
  for (std::size_t a = 0; a < 3; ++a) rows[to][a] += produced[a];
  return SolutionArray(array.base(), std::move(rows));
}

int move_number(MoveId move) { return static_cast<int>(move); }

std::string to_string(const MoveApplication& app) {
  std::ostringstream os;
  os << "Move " << move_number(app.move)
     << (app.direction == Direction::Reduction ? " reduction" : " expansion");
  if (app.move == MoveId::M1) {
    os << " at row " << app.row << (app.columns == ColumnPair::Left ? " (left)" : " (right)");
  } else {
    os << " at rows (" << app.row << "," << app.row + 1 << ")";
  }
  return os.str();
}

}  // namespace ufe
