// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ufe/characterization.hpp"
#include "ufe/enumerator.hpp"
#include "ufe/errors.hpp"
#include "ufe/moves.hpp"
#include "ufe/oracle.hpp"
#include "ufe/priority.hpp"
#include "ufe/solution_array.hpp"

using namespace ufe;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects mismatches; only the first few are printed.
struct Outcome {
  std::vector<std::string> problems;
  std::string note;

  void fail(const std::string& what) { problems.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string cell(Count k, Count n) {
  return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

// Golden CSV: header "n,k=a,k=b,...", then one row per n.
struct Table {
  std::vector<Count> ks;
  std::map<std::pair<Count, Count>, Count> value;  // (k, n)
};

Table read_table(const std::string& name) {
  std::ifstream in(std::string(UFE_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  Table t;
  std::string line;
  std::getline(in, line);
  std::stringstream header(line);
  std::string field;
  std::getline(header, field, ',');
  while (std::getline(header, field, ',')) t.ks.push_back(std::stoull(field.substr(2)));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::getline(row, field, ',');
    const Count n = std::stoull(field);
    for (Count k : t.ks) {
      std::getline(row, field, ',');
      t.value[{k, n}] = std::stoull(field);
    }
  }
  return t;
}

constexpr Count kMaxN = 14;

// Level counts for every k used by the table criteria, computed once.
using CountCache = std::map<Count, std::vector<LevelCounts>>;

Outcome nontrivial_table(const CountCache& counts, double elapsed) {
  Outcome o;
  const Table golden = read_table("counts_nontrivial.csv");
  std::size_t cells = 0;
  for (Count k : golden.ks) {
    for (Count n = 1; n <= kMaxN; ++n) {
      const Count got = counts.at(k)[n - 1].nontrivial;
      const Count want = golden.value.at({k, n});
      ++cells;
      if (got != want) {
        o.fail(cell(k, n) + " got " + std::to_string(got) + ", table has " + std::to_string(want));
      }
    }
  }
  o.expect(counts.at(3)[13].nontrivial == 434378, "anchor (3,14) != 434378");
  o.expect(counts.at(5)[8].nontrivial == 159, "anchor (5,9) != 159");
  o.expect(counts.at(19)[13].nontrivial == 16, "anchor (19,14) != 16");
  o.expect(counts.at(11)[4].nontrivial == 0, "anchor (11,5) != 0");
  o.expect(elapsed < 300, "enumeration took longer than 5 minutes");
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << cells << " cells, enumeration " << elapsed << " s";
  o.note = note.str();
  return o;
}

Outcome distinct_table(const CountCache& counts) {
  Outcome o;
  const Table golden = read_table("counts_distinct.csv");
  for (Count k : {3, 5, 6, 7}) {
    for (Count n = 1; n <= kMaxN; ++n) {
      const Count got = counts.at(k)[n - 1].distinct_nontrivial;
      const Count want = golden.value.at({k, n});
      if (got != want) {
        o.fail(cell(k, n) + " got " + std::to_string(got) + ", table has " + std::to_string(want));
      }
    }
  }
  // The last column of the table stands for every k >= 9.
  for (const auto& [k, levels] : counts) {
    if (k < 9) continue;
    for (Count n = 1; n <= kMaxN; ++n) {
      o.expect(levels[n - 1].distinct_nontrivial == golden.value.at({9, n}),
               cell(k, n) + " distinct count is not 0");
    }
  }
  o.expect(counts.at(3)[13].distinct_nontrivial == 1314, "anchor (3,14) != 1314");
  for (Count n = 5; n <= kMaxN; n += 2) {
    o.expect(counts.at(5)[n - 1].distinct_nontrivial == 1, "anchor " + cell(5, n) + " != 1");
  }
  o.note = "k in {3,5,6,7} against the table, k = 9..19 all zero";
  return o;
}

// Reference drawings: rows are listed top row first.
using Drawn = std::vector<Row>;

struct Figure {
  Count k;
  Count max_n;
  std::map<char, Drawn> nodes;
  std::set<char> red;
  std::vector<std::tuple<char, char, int>> edges;  // parent, child, move
};

SolutionArray from_drawn(const Base& base, Drawn rows) {
  std::reverse(rows.begin(), rows.end());
  return SolutionArray(base, std::move(rows));
}

Figure drawing_k3() {
  Figure f{3, 4, {}, {'a', 'b', 'd', 'i'}, {}};
  f.nodes = {
      {'a', {{1, 0, 0}}},
      {'b', {{0, 2, 0}}},
      {'c', {{3, 0, 0}, {0, 0, 0}}},
      {'d', {{0, 1, 2}}},
      {'e', {{1, 1, 0}, {0, 1, 0}}},
      {'f', {{2, 2, 0}, {0, 0, 0}}},
      {'g', {{2, 0, 1}, {0, 0, 1}}},
      {'h', {{0, 1, 1}, {0, 1, 1}}},
      {'i', {{0, 0, 4}}},
      {'j', {{1, 1, 0}, {0, 0, 2}}},
      {'k', {{1, 0, 2}, {0, 1, 0}}},
      {'l', {{1, 1, 0}, {1, 0, 0}, {0, 1, 0}}},
      {'m', {{0, 3, 0}, {0, 1, 0}}},
  };
  f.edges = {{'a', 'b', 1}, {'a', 'c', 2}, {'b', 'd', 1}, {'b', 'e', 4},
             {'c', 'f', 1}, {'d', 'g', 3}, {'d', 'h', 5}, {'d', 'i', 1},
             {'d', 'j', 4}, {'e', 'k', 1}, {'e', 'l', 4}, {'e', 'm', 1}};
  return f;
}

Figure drawing_k5() {
  Figure f{5, 5, {}, {'a', 'b', 'c', 'e'}, {}};
  f.nodes = {
      {'a', {{1, 0, 0}}},
      {'b', {{0, 2, 0}}},
      {'c', {{0, 1, 2}}},
      {'d', {{1, 0, 1}, {0, 1, 1}}},
      {'e', {{0, 0, 4}}},
      {'f', {{2, 1, 0}, {0, 1, 0}}},
      {'g', {{5, 0, 0}, {0, 0, 0}}},
      {'h', {{0, 2, 1}, {0, 1, 1}}},
      {'i', {{1, 0, 1}, {1, 0, 0}, {0, 1, 1}}},
      {'j', {{1, 0, 1}, {0, 0, 3}}},
      {'k', {{2, 1, 0}, {0, 0, 2}}},
      {'l', {{1, 3, 0}, {0, 1, 0}}},
      {'m', {{2, 0, 2}, {0, 1, 0}}},
  };
  f.edges = {{'a', 'b', 1}, {'b', 'c', 1}, {'c', 'd', 3}, {'c', 'e', 1},
             {'b', 'f', 4}, {'a', 'g', 2}, {'d', 'h', 1}, {'d', 'i', 3},
             {'e', 'j', 3}, {'c', 'k', 4}, {'f', 'l', 1}, {'f', 'm', 1}};
  return f;
}

void compare_tree(const Figure& fig, Outcome& o) {
  const Base base = make_base(fig.k);
  const EnumerationTree tree = build_tree(base, fig.max_n);
  const std::string tag = "k=" + std::to_string(fig.k) + ": ";

  std::map<SolutionArray, char> drawn;
  for (const auto& [name, rows] : fig.nodes) drawn.emplace(from_drawn(base, rows), name);
  o.expect(drawn.size() == 13, tag + "drawing has repeated nodes");

  std::set<char> seen;
  std::set<char> red;
  for (const SolutionArray& a : tree.nodes) {
    const auto it = drawn.find(a);
    if (it == drawn.end()) {
      o.fail(tag + "extra node " + to_string(a));
      continue;
    }
    seen.insert(it->second);
    if (!is_nontrivial(a)) red.insert(it->second);
  }
  o.expect(tree.nodes.size() == 13, tag + std::to_string(tree.nodes.size()) + " nodes");
  o.expect(seen.size() == fig.nodes.size(), tag + "drawn nodes missing from the tree");
  o.expect(red == fig.red, tag + "trivial nodes differ");

  std::set<std::tuple<char, char, int>> got;
  for (const TreeEdge& e : tree.edges) {
    const auto p = drawn.find(tree.nodes[e.parent]);
    const auto c = drawn.find(tree.nodes[e.child]);
    if (p == drawn.end() || c == drawn.end()) continue;
    got.emplace(p->second, c->second, move_number(e.move));
  }
  const std::set<std::tuple<char, char, int>> want(fig.edges.begin(), fig.edges.end());
  o.expect(tree.edges.size() == 12, tag + std::to_string(tree.edges.size()) + " edges");
  for (const auto& e : want) {
    if (!got.count(e)) {
      o.fail(tag + "missing edge " + std::string(1, std::get<0>(e)) + " -" +
             std::to_string(std::get<2>(e)) + "-> " + std::get<1>(e));
    }
  }
  for (const auto& e : got) {
    if (!want.count(e)) {
      o.fail(tag + "extra edge " + std::string(1, std::get<0>(e)) + " -" +
             std::to_string(std::get<2>(e)) + "-> " + std::get<1>(e));
    }
  }
}

Outcome golden_trees() {
  Outcome o;
  compare_tree(drawing_k3(), o);
  compare_tree(drawing_k5(), o);
  o.note = "k=3 n<=4 and k=5 n<=5, 13 nodes and 12 edges each";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t total = 0;
  for (Count k : {3, 5, 6, 7, 9, 10, 12}) {
    const Base base = make_base(k);
    const FrontierMap sol = enumerate_up_to(base, 8);
    for (Count n = 1; n <= 8; ++n) {
      std::set<Denominators> enumerated;
      for (const SolutionArray& a : sol.at(n)) enumerated.insert(solution_from_array(a));
      const std::set<Denominators> brute = brute_force(base, n);
      total += brute.size();
      o.expect(enumerated == brute, cell(k, n) + ": " + std::to_string(enumerated.size()) +
                                        " enumerated vs " + std::to_string(brute.size()) +
                                        " by brute force");
    }
  }
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 60, "took longer than 1 minute");
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << total << " solutions, " << elapsed << " s";
  o.note = note.str();
  return o;
}

Outcome existence(const CountCache& counts) {
  Outcome o;
  const Table golden = read_table("counts_nontrivial.csv");
  for (Count k : golden.ks) {
    const Base base = make_base(k);
    const Threshold th = min_n_nontrivial(base);
    Count first = 0;
    for (Count n = 1; n <= kMaxN; ++n) {
      const bool counted = counts.at(k)[n - 1].nontrivial > 0;
      o.expect(exists_nontrivial(base, n) == counted, cell(k, n) + " existence disagrees");
      if (counted && first == 0) first = n;
    }
    if (k == 3) {
      o.expect(th.special_case && first == 3 && exists_nontrivial(base, 3) &&
                   counts.at(3)[3].nontrivial > 0 && th.n_min == 4,
               "(3,3) special case");
    } else if (th.n_min <= kMaxN) {
      o.expect(first == th.n_min, "k=" + std::to_string(k) + " first nonzero row " +
                                      std::to_string(first) + ", n_min " + std::to_string(th.n_min));
    } else {
      o.expect(first == 0, "k=" + std::to_string(k) + " has solutions below n_min");
    }
  }
  o.note = "every reference cell, first nonzero row equals n_min";
  return o;
}

constexpr MoveId kMoves[] = {MoveId::M1, MoveId::M2, MoveId::M3, MoveId::M4, MoveId::M5};

SolutionArray random_array(const Base& base, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows_dist(1, 4);
  std::uniform_int_distribution<Count> entry(0, base.k() + 2);
  std::vector<Row> rows(rows_dist(rng));
  for (Row& r : rows) r = {entry(rng), entry(rng), entry(rng)};
  return SolutionArray(base, std::move(rows));
}

void random_moves(Outcome& o) {
  std::mt19937_64 rng(2024);
  for (Count k : {3, 5, 6, 7, 9, 10, 11, 12, 13, 14}) {
    const Base base = make_base(k);
    for (int trial = 0; trial < 300; ++trial) {
      const SolutionArray a = random_array(base, rng);
      const Rational sum = sum_value(a);
      const Count n = term_count(a);
      for (MoveId m : kMoves) {
        if (!move_defined(m, base)) continue;
        const Count delta = move_delta(m, base);
        for (std::size_t row = 0; row <= a.row_count(); ++row) {
          for (ColumnPair cols : {ColumnPair::Left, ColumnPair::Right}) {
            if (m != MoveId::M1 && cols == ColumnPair::Right) continue;
            for (Direction dir : {Direction::Reduction, Direction::Expansion}) {
              const MoveApplication app{m, dir, row, cols};
              if (!applicable(a, app)) continue;
              const SolutionArray b = apply(a, app);
              const Count want = dir == Direction::Reduction ? n - delta : n + delta;
              if (sum_value(b) != sum || term_count(b) != want) {
                o.fail("k=" + std::to_string(k) + " " + to_string(app) + " on " + to_string(a));
              }
            }
          }
        }
      }
    }
  }
}

void enumerated_properties(Outcome& o) {
  for (Count k = 3; k <= 19; ++k) {
    if (is_power_of_two(k)) continue;
    const Base base = make_base(k);
    const Count max_n = k <= 7 ? 10 : 12;
    const FrontierMap sol = enumerate_up_to(base, max_n);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    std::size_t trivial = 0;
    for (Count n = 1; n <= max_n; ++n) {
      for (const SolutionArray& a : sol.at(n)) {
        const auto chain = reduction_chain(a);
        const SolutionArray& end = chain.empty() ? a : chain.back().child;
        o.expect(end == SolutionArray::trivial(base), tag + "chain of " + to_string(a));

        if (!is_nontrivial(a)) {
          ++trivial;
        } else {
          o.expect(n >= 3, tag + "nontrivial array with n < 3");
          const std::size_t beta = top_nonzero_row(a);
          const Count weight = 4 * a.at(0, beta) + 2 * a.at(1, beta) + a.at(2, beta);
          o.expect(weight % k == 0, tag + "top row of " + to_string(a) + " not divisible by k");
        }

        if (n > 7) continue;  // expansions of the deep levels are exercised by the counts
        for (MoveId m : kMoves) {
          const auto children = priority_expansions(a, m);
          if (k % 4 == 1 && m == MoveId::M5) {
            o.expect(children.empty(), tag + "Move 5 expansion of " + to_string(a));
          }
          for (const SolutionArray& c : children) {
            const auto step = priority_reduction(c);
            o.expect(step && step->app.move == m && step->child == a,
                     tag + "roundtrip fails for " + to_string(c));
          }
        }
      }
    }
    o.expect(trivial == 4, tag + std::to_string(trivial) + " trivial arrays");
  }
}

Outcome properties() {
  Outcome o;
  random_moves(o);
  enumerated_properties(o);
  o.note = "random moves, roundtrip, chains, divisibility, four trivial arrays, "
           "no small nontrivial arrays, no Move 5 for k = 1 mod 4";
  return o;
}

Outcome constructions() {
  Outcome o;
  std::size_t built = 0;
  for (Count k = 3; k <= 40; ++k) {
    if (is_power_of_two(k)) continue;
    const Base base = make_base(k);
    const Threshold th = min_n_nontrivial(base);
    for (Count n = th.n_min; n <= th.n_min + 2 * k; ++n) {
      const SolutionArray a = construct_nontrivial(base, n);
      ++built;
      o.expect(is_solution(a) && term_count(a) == n && is_nontrivial(a),
               cell(k, n) + " construction " + to_string(a));
    }
  }
  std::size_t found = 0;
  for (Count k = 3; k <= 19; ++k) {
    if (is_power_of_two(k)) continue;
    const Base base = make_base(k);
    const FrontierMap sol = enumerate_up_to(base, kMaxN);
    for (Count n = 1; n <= kMaxN; ++n) {
      if (!exists_nontrivial(base, n)) continue;
      const SolutionArray a = construct_nontrivial(base, n);
      const auto level = sol.at(n);
      const bool in = std::binary_search(level.begin(), level.end(), a);
      o.expect(in, cell(k, n) + " construction not enumerated");
      found += in;
    }
  }
  o.note = std::to_string(built) + " constructions checked, " + std::to_string(found) +
           " located in the enumeration";
  return o;
}

bool report(int id, const std::string& title, const Outcome& o) {
  const bool ok = o.problems.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!o.note.empty()) std::cout << " (" << o.note << ")";
  std::cout << "\n";
  const std::size_t shown = std::min<std::size_t>(o.problems.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << o.problems[i] << "\n";
  if (o.problems.size() > shown) {
    std::cout << "    ... " << o.problems.size() - shown << " more\n";
  }
  std::cout.flush();
  return ok;
}

template <typename F>
bool run(int id, const std::string& title, F&& body) {
  try {
    return report(id, title, body());
  } catch (const std::exception& e) {
    Outcome o;
    o.fail(std::string("exception: ") + e.what());
    return report(id, title, o);
  }
}

}  // namespace

int main() {
  CountCache counts;
  double count_seconds = 0;
  bool counted = true;
  try {
    const auto start = Clock::now();
    for (Count k = 3; k <= 19; ++k) {
      if (!is_power_of_two(k)) counts.emplace(k, count_levels(make_base(k), kMaxN));
    }
    count_seconds = seconds_since(start);
  } catch (const std::exception& e) {
    std::cout << "counting failed: " << e.what() << "\n";
    counted = false;
  }

  bool ok = counted;
  ok &= run(1, "nontrivial counts match the reference table", [&] { return nontrivial_table(counts, count_seconds); });
  ok &= run(2, "distinct counts match the reference table", [&] { return distinct_table(counts); });
  ok &= run(3, "small trees match the reference drawings", golden_trees);
  ok &= run(4, "enumerator equals brute force for n <= 8", oracle_equivalence);
  ok &= run(5, "existence criterion matches the counts", [&] { return existence(counts); });
  ok &= run(6, "property suites", properties);
  ok &= run(7, "explicit constructions are valid and enumerated", constructions);
  return ok ? 0 : 1;
}
