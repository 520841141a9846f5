#pragma once

#include "ufe/solution_array.hpp"

namespace ufe {

/// Least n with a nontrivial solution, by residue class of k:
/// (k+8)/4, (k+11)/4, (k+10)/4, (k+13)/4 for k = 0, 1, 2, 3 mod 4.
/// For k = 3 the pair (3,3) also has one, below the general bound of 4.
struct Threshold {
  Count k;
  Count n_min;
  bool special_case;
};

Threshold min_n_nontrivial(const Base& base);

bool exists_nontrivial(const Base& base, Count n);

/// Parameters of the explicit construction: s + 1 rows, and t extra Move 1
/// expansions on the top row.
struct ConstructionParams {
  Count s;
  Count t;
};

/// Throws NoNontrivialSolutionError unless exists_nontrivial(base, n) and
/// (k,n) != (3,3).
ConstructionParams construction_params(const Base& base, Count n);

/// An explicit nontrivial solution with exactly n terms. Rows bottom-up:
///
///   k = 0 mod 4: (0,1,1), (k/4-1, 1, 1) x (s-1), (k/4-t, 2t, 0)
///   k = 1 mod 4: (0,1,1), ((k-1)/4, 0, 0) x (s-1), ((k-1)/4-t, 2t, 1)
///   k = 2 mod 4: (0,1,1), ((k-2)/4, 0, 1) x (s-1), ((k-2)/4-t, 1+2t, 0)
///   k = 3 mod 4: (0,1,1), ((k-3)/4, 1, 0) x (s-1), ((k-3)/4-t, 1+2t, 1)
///
/// and [[0,1,0],[1,1,0]] for (3,3). Throws NoNontrivialSolutionError when no
/// nontrivial solution exists.
SolutionArray construct_nontrivial(const Base& base, Count n);

}  // namespace ufe
