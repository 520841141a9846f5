#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ufe/moves.hpp"
#include "ufe/solution_array.hpp"

namespace ufe {

struct EnumerateOptions {
  /// Worker threads used to expand a level. 0 means one per hardware thread.
  unsigned threads = 1;
};

/// Moves whose priority expansions generate the whole tree for this k:
/// {1,2} for k = 0 mod 4, {1,2,3,4} for 1 mod 4, {1,2,4} for 2 mod 4 and
/// all five for 3 mod 4. Move 5 is left out for 1 mod 4 because every
/// expansion under it reduces by Move 3 instead.
std::vector<MoveId> enumeration_moves(const Base& base);

/// All solution arrays with j terms, for j = 1..max_n. Each level is sorted
/// in canonical order.
class FrontierMap {
 public:
  FrontierMap(Base base, std::vector<std::vector<SolutionArray>> levels, std::size_t duplicates)
      : base_(base), levels_(std::move(levels)), duplicates_(duplicates) {}

  const Base& base() const { return base_; }
  Count max_n() const { return levels_.size(); }

  /// sol(j); empty for j == 0 or j > max_n().
  std::span<const SolutionArray> at(Count j) const;

  /// Children generated more than once while building the levels. The tree
  /// property says this is always 0.
  std::size_t duplicates() const { return duplicates_; }

 private:
  Base base_;
  std::vector<std::vector<SolutionArray>> levels_;
  std::size_t duplicates_;
};

using LevelVisitor = std::function<void(Count j, std::span<const SolutionArray> level)>;

/// Runs the level-by-level construction and hands each finished level to
/// `visit` in order j = 1..max_n. Levels that no later step reads are freed
/// as soon as possible, so this is the low-memory path for counting.
/// Returns the number of duplicate children dropped.
std::size_t for_each_level(const Base& base, Count max_n, const LevelVisitor& visit,
                           const EnumerateOptions& options = {});

FrontierMap enumerate_up_to(const Base& base, Count max_n, const EnumerateOptions& options = {});

struct LevelCounts {
  Count total = 0;
  Count nontrivial = 0;
  Count distinct_nontrivial = 0;

  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

/// Counts for every n = 1..max_n in one pass; element n-1 holds level n.
std::vector<LevelCounts> count_levels(const Base& base, Count max_n,
                                      const EnumerateOptions& options = {});

Count count_nontrivial(const Base& base, Count n, const EnumerateOptions& options = {});
Count count_distinct_nontrivial(const Base& base, Count n, const EnumerateOptions& options = {});

struct TreeEdge {
  std::size_t child;
  std::size_t parent;
  MoveId move;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Priority-expansion tree rooted at [[1,0,0]]. Nodes are ordered by term
/// count, then canonical order, so nodes[0] is the root. Each non-root node
/// has exactly one edge, to the parent given by its priority reduction.
struct EnumerationTree {
  Base base;
  std::vector<SolutionArray> nodes;
  std::vector<TreeEdge> edges;
};

EnumerationTree build_tree(const Base& base, Count max_n, const EnumerateOptions& options = {});

}  // namespace ufe
