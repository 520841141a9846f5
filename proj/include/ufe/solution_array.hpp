#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ufe/rational.hpp"

namespace ufe {

using Count = std::uint64_t;

/// k mod 4. Decides which variants of the moves exist.
enum class ResidueClass : std::uint8_t { R0 = 0, R1 = 1, R2 = 2, R3 = 3 };

/// The fixed base k of S(k) = { 2^a k^b : a in {0,1,2}, b >= 0 }.
class Base {
 public:
  Count k() const { return k_; }
  ResidueClass residue() const { return residue_; }
  bool is_odd() const { return (k_ & 1u) != 0; }

  friend bool operator==(const Base&, const Base&) = default;
  friend auto operator<=>(const Base&, const Base&) = default;

 private:
  friend Base make_base(Count k);
  Base(Count k, ResidueClass residue) : k_(k), residue_(residue) {}

  Count k_;
  ResidueClass residue_;
};

/// Validates k and classifies it mod 4. Throws PowerOfTwoError for k = 2^j
/// (including 1 and 2) and Error for k = 0.
Base make_base(Count k);

bool is_power_of_two(Count k);

/// One row (c_{0,b}, c_{1,b}, c_{2,b}) of a solution array.
using Row = std::array<Count, 3>;

/// Count array c_{a,b}: how often 1/(2^a k^b) occurs in a multiset of unit
/// fractions. Rows are stored bottom-up, so rows()[b] is row b.
///
/// The stored form is canonical: no trailing all-zero rows, except that at
/// least one row is always present. Interior and bottom zero rows are kept.
class SolutionArray {
 public:
  SolutionArray(Base base, std::vector<Row> rows);
  SolutionArray(Base base, std::initializer_list<Row> rows)
      : SolutionArray(base, std::vector<Row>(rows)) {}

  /// The root [[1,0,0]], i.e. the one-term solution 1/1.
  static SolutionArray trivial(Base base);

  const Base& base() const { return base_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }

  /// c_{a,b}; zero for rows above the stored ones.
  Count at(std::size_t a, std::size_t b) const {
    return b < rows_.size() ? rows_[b][a] : 0;
  }

  bool is_empty() const;

  /// Compact byte string identifying the array (including k). Equal arrays
  /// produce equal keys.
  std::string canonical_key() const;

  friend bool operator==(const SolutionArray&, const SolutionArray&) = default;
  friend auto operator<=>(const SolutionArray&, const SolutionArray&) = default;

 private:
  void canonicalize();

  Base base_;
  std::vector<Row> rows_;
};

/// Largest b with a nonzero row. Throws EmptyArrayError if every entry is 0.
std::size_t top_nonzero_row(const SolutionArray& array);

/// Sum of c_{a,b} / (2^a k^b), exactly.
Rational sum_value(const SolutionArray& array);

bool is_solution(const SolutionArray& array);

/// Some nonzero entry above row 0.
bool is_nontrivial(const SolutionArray& array);

/// Every entry is at most 1 (no repeated denominator).
bool is_distinct(const SolutionArray& array);

/// Total number of terms n.
Count term_count(const SolutionArray& array);

/// Builds the array of a multiset of denominators. Throws NotInSkError if a
/// value is not of the form 2^a k^b with a <= 2.
SolutionArray array_from_solution(std::span<const BigInt> denominators, Base base);

/// Nondecreasing list of denominators, one per term.
std::vector<BigInt> solution_from_array(const SolutionArray& array);

/// 2^a k^b.
BigInt denominator_of(Base base, std::size_t a, std::size_t b);

/// Renders rows as [[c0,c1,c2],...] bottom-up.
std::string to_string(const SolutionArray& array);

}  // namespace ufe
