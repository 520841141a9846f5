#include "ufe/enumerator.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "ufe/errors.hpp"
#include "ufe/priority.hpp"

namespace ufe {
namespace {

struct WorkItem {
  const SolutionArray* source;
  MoveId move;
};

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<SolutionArray> expand_all(std::span<const WorkItem> work, unsigned threads) {
  auto run = [](std::span<const WorkItem> slice) {
    std::vector<SolutionArray> out;
    for (const WorkItem& item : slice) {
      std::vector<SolutionArray> children = priority_expansions(*item.source, item.move);
      std::move(children.begin(), children.end(), std::back_inserter(out));
    }
    return out;
  };

  threads = std::min<std::size_t>(threads, std::max<std::size_t>(work.size() / 64, 1));
  if (threads <= 1) return run(work);

  std::vector<std::vector<SolutionArray>> partial(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (work.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(work.size(), t * chunk);
      const std::size_t end = std::min(work.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] { partial[t] = run(work.subspan(begin, end - begin)); });
    }
  }
  std::vector<SolutionArray> out;
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<MoveId> enumeration_moves(const Base& base) {
  switch (base.residue()) {
    case ResidueClass::R0:
      return {MoveId::M1, MoveId::M2};
    case ResidueClass::R1:
      return {MoveId::M1, MoveId::M2, MoveId::M3, MoveId::M4};
    case ResidueClass::R2:
      return {MoveId::M1, MoveId::M2, MoveId::M4};
    case ResidueClass::R3:
      return {MoveId::M1, MoveId::M2, MoveId::M3, MoveId::M4, MoveId::M5};
  }
  return {};
}

std::span<const SolutionArray> FrontierMap::at(Count j) const {
  if (j == 0 || j > levels_.size()) return {};
  return levels_[j - 1];
}

std::size_t for_each_level(const Base& base, Count max_n, const LevelVisitor& visit,
                           const EnumerateOptions& options) {
  if (max_n == 0) return 0;
  const unsigned threads = resolve_threads(options.threads);

  std::vector<std::pair<MoveId, Count>> branches;
  Count lookback = 1;
  for (MoveId move : enumeration_moves(base)) {
    const Count delta = move_delta(move, base);
    branches.emplace_back(move, delta);
    lookback = std::max(lookback, delta);
  }

  // levels[j] = sol(j); index 0 stays empty.
  std::vector<std::vector<SolutionArray>> levels(max_n + 1);
  levels[1].push_back(SolutionArray::trivial(base));
  visit(1, levels[1]);

  std::size_t duplicates = 0;
  for (Count j = 2; j <= max_n; ++j) {
    std::vector<WorkItem> work;
    for (const auto& [move, delta] : branches) {
      if (delta >= j) continue;
      for (const SolutionArray& source : levels[j - delta]) work.push_back({&source, move});
    }
    std::vector<SolutionArray> level = expand_all(work, threads);
    std::sort(level.begin(), level.end());
    const auto last = std::unique(level.begin(), level.end());
    duplicates += static_cast<std::size_t>(level.end() - last);
    level.erase(last, level.end());
    levels[j] = std::move(level);
    visit(j, levels[j]);

    // Later steps read sol(j' - delta) with j' > j, never below j + 1 - lookback.
    if (j > lookback) std::vector<SolutionArray>().swap(levels[j - lookback]);
  }
  return duplicates;
}

FrontierMap enumerate_up_to(const Base& base, Count max_n, const EnumerateOptions& options) {
  std::vector<std::vector<SolutionArray>> levels;
  levels.reserve(max_n);
  const std::size_t duplicates = for_each_level(
      base, max_n,
      [&levels](Count, std::span<const SolutionArray> level) {
        levels.emplace_back(level.begin(), level.end());
      },
      options);
  return FrontierMap(base, std::move(levels), duplicates);
}

std::vector<LevelCounts> count_levels(const Base& base, Count max_n,
                                      const EnumerateOptions& options) {
  std::vector<LevelCounts> counts;
  for_each_level(
      base, max_n,
      [&counts](Count, std::span<const SolutionArray> level) {
        LevelCounts c;
        c.total = level.size();
        for (const SolutionArray& a : level) {
          if (!is_nontrivial(a)) continue;
          ++c.nontrivial;
          if (is_distinct(a)) ++c.distinct_nontrivial;
        }
        counts.push_back(c);
      },
      options);
  return counts;
}

Count count_nontrivial(const Base& base, Count n, const EnumerateOptions& options) {
  if (n == 0) throw Error("n must be at least 1");
  return count_levels(base, n, options).back().nontrivial;
}

Count count_distinct_nontrivial(const Base& base, Count n, const EnumerateOptions& options) {
  if (n == 0) throw Error("n must be at least 1");
  return count_levels(base, n, options).back().distinct_nontrivial;
}

EnumerationTree build_tree(const Base& base, Count max_n, const EnumerateOptions& options) {
  if (max_n == 0) throw Error("n must be at least 1");
  EnumerationTree tree{base, {}, {}};
  for_each_level(
      base, max_n,
      [&tree](Count, std::span<const SolutionArray> level) {
        tree.nodes.insert(tree.nodes.end(), level.begin(), level.end());
      },
      options);

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) index.emplace(tree.nodes[i].canonical_key(), i);

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    std::optional<ReductionStep> step = priority_reduction(tree.nodes[i]);
    if (!step) continue;
    auto it = index.find(step->child.canonical_key());
    if (it == index.end()) {
      throw Error("parent of " + to_string(tree.nodes[i]) + " missing from the tree");
    }
    tree.edges.push_back({i, it->second, step->app.move});
  }
  return tree;
}

}  // namespace ufe
