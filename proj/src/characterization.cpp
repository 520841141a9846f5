#include "ufe/characterization.hpp"

#include "ufe/errors.hpp"

namespace ufe {
namespace {

Count exact_quarter(Count numerator) {
  if (numerator % 4 != 0) throw Error("threshold formula is not integral");
  return numerator / 4;
}

void require_exists(const Base& base, Count n) {
  if (!exists_nontrivial(base, n)) {
    throw NoNontrivialSolutionError("no nontrivial solution with n = " + std::to_string(n) +
                                    " terms for k = " + std::to_string(base.k()));
  }
}

}  // namespace

Threshold min_n_nontrivial(const Base& base) {
  const Count k = base.k();
  Count n_min = 0;
  switch (base.residue()) {
    case ResidueClass::R0: n_min = exact_quarter(k + 8); break;
    case ResidueClass::R1: n_min = exact_quarter(k + 11); break;
    case ResidueClass::R2: n_min = exact_quarter(k + 10); break;
    case ResidueClass::R3: n_min = exact_quarter(k + 13); break;
  }
  return {k, n_min, k == 3};
}

bool exists_nontrivial(const Base& base, Count n) {
  const Threshold th = min_n_nontrivial(base);
  return (th.special_case && n == 3) || n >= th.n_min;
}

ConstructionParams construction_params(const Base& base, Count n) {
  require_exists(base, n);
  const Count k = base.k();
  // Each block adds `step` terms on top of a fixed `offset`.
  Count offset = 0;
  Count step = 0;
  switch (base.residue()) {
    case ResidueClass::R0: offset = 1; step = k / 4 + 1; break;
    case ResidueClass::R1: offset = 3; step = (k - 1) / 4; break;
    case ResidueClass::R2: offset = 2; step = (k + 2) / 4; break;
    case ResidueClass::R3: offset = 3; step = (k + 1) / 4; break;
  }
  if (n < offset + step) {
    throw NoNontrivialSolutionError("(3,3) has no block construction");
  }
  const Count s = (n - offset) / step;
  return {s, n - offset - s * step};
}

SolutionArray construct_nontrivial(const Base& base, Count n) {
  require_exists(base, n);
  const Count k = base.k();
  if (k == 3 && n == 3) return SolutionArray(base, {Row{0, 1, 0}, Row{1, 1, 0}});

  const auto [s, t] = construction_params(base, n);
  Row middle{};
  Row top{};
  switch (base.residue()) {
    case ResidueClass::R0:
      middle = {k / 4 - 1, 1, 1};
      top = {k / 4 - t, 2 * t, 0};
      break;
    case ResidueClass::R1:
      middle = {(k - 1) / 4, 0, 0};
      top = {(k - 1) / 4 - t, 2 * t, 1};
      break;
    case ResidueClass::R2:
      middle = {(k - 2) / 4, 0, 1};
      top = {(k - 2) / 4 - t, 1 + 2 * t, 0};
      break;
    case ResidueClass::R3:
      middle = {(k - 3) / 4, 1, 0};
      top = {(k - 3) / 4 - t, 1 + 2 * t, 1};
      break;
  }
  std::vector<Row> rows;
  rows.reserve(s + 1);
  rows.push_back({0, 1, 1});
  for (Count i = 1; i < s; ++i) rows.push_back(middle);
  rows.push_back(top);
  return SolutionArray(base, std::move(rows));
}

}  // namespace ufe
