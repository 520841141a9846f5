#include "ufe/solution_array.hpp"

#include <algorithm>
#include <sstream>

#include "ufe/errors.hpp"

namespace ufe {

bool is_power_of_two(Count k) { return k != 0 && (k & (k - 1)) == 0; }

Base make_base(Count k) {
  if (k == 0) throw Error("k must be a positive integer");
  if (is_power_of_two(k)) {
    throw PowerOfTwoError("k = " + std::to_string(k) + " is a power of 2");
  }
  return Base(k, static_cast<ResidueClass>(k % 4));
}

SolutionArray::SolutionArray(Base base, std::vector<Row> rows)
    : base_(base), rows_(std::move(rows)) {
  canonicalize();
}

SolutionArray SolutionArray::trivial(Base base) { return SolutionArray(base, {Row{1, 0, 0}}); }

void SolutionArray::canonicalize() {
  constexpr Row zero{0, 0, 0};
  while (rows_.size() > 1 && rows_.back() == zero) rows_.pop_back();
  if (rows_.empty()) rows_.push_back(zero);
}

bool SolutionArray::is_empty() const {
  return rows_.size() == 1 && rows_[0] == Row{0, 0, 0};
}

std::string SolutionArray::canonical_key() const {
  // Little-endian varints: k, row count, then every entry.
  std::string key;
  auto put = [&key](Count v) {
    while (v >= 0x80) {
      key.push_back(static_cast<char>((v & 0x7f) | 0x80));
      v >>= 7;
    }
    key.push_back(static_cast<char>(v));
  };
  put(base_.k());
  put(rows_.size());
  for (const Row& row : rows_) {
    for (Count c : row) put(c);
  }
  return key;
}

std::size_t top_nonzero_row(const SolutionArray& array) {
  if (array.is_empty()) throw EmptyArrayError("array has no nonzero entry");
  // Canonical form: the top stored row is nonzero unless it is the only row.
  return array.row_count() - 1;
}

BigInt denominator_of(Base base, std::size_t a, std::size_t b) {
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), base.k(), b);
  return power << static_cast<mp_bitcnt_t>(a);
}

Rational sum_value(const SolutionArray& array) {
  Rational total;
  for (std::size_t b = 0; b < array.row_count(); ++b) {
    for (std::size_t a = 0; a < 3; ++a) {
      Count c = array.at(a, b);
      if (c == 0) continue;
      total += Rational(BigInt(c), denominator_of(array.base(), a, b));
    }
  }
  return total;
}

bool is_solution(const SolutionArray& array) { return sum_value(array) == Rational(1); }

bool is_nontrivial(const SolutionArray& array) {
  const auto& rows = array.rows();
  return std::any_of(rows.begin() + 1, rows.end(),
                     [](const Row& r) { return r[0] + r[1] + r[2] > 0; });
}

bool is_distinct(const SolutionArray& array) {
  for (const Row& row : array.rows()) {
    for (Count c : row) {
      if (c > 1) return false;
    }
  }
  return true;
}

Count term_count(const SolutionArray& array) {
  Count n = 0;
  for (const Row& row : array.rows()) n += row[0] + row[1] + row[2];
  return n;
}

SolutionArray array_from_solution(std::span<const BigInt> denominators, Base base) {
  std::vector<Row> rows;
  const BigInt k(static_cast<unsigned long>(base.k()));
  for (const BigInt& x : denominators) {
    if (x <= 0) throw NotInSkError(x.get_str() + " is not a positive integer");
    BigInt rest = x;
    std::size_t a = 0;
    // k is not a power of 2, so k^(b+1) never divides 2^a k^b with a <= 2 and
    // dividing out k greedily recovers b.
    std::size_t b = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), k.get_mpz_t())) {
      rest /= k;
      ++b;
    }
    while (rest % 2 == 0) {
      rest /= 2;
      ++a;
    }
    if (rest != 1 || a > 2) {
      throw NotInSkError(x.get_str() + " is not of the form 2^a*" + k.get_str() +
                         "^b with a <= 2");
    }
    if (rows.size() <= b) rows.resize(b + 1, Row{0, 0, 0});
    ++rows[b][a];
  }
  return SolutionArray(base, std::move(rows));
}

std::vector<BigInt> solution_from_array(const SolutionArray& array) {
  std::vector<BigInt> out;
  out.reserve(term_count(array));
  for (std::size_t b = 0; b < array.row_count(); ++b) {
    for (std::size_t a = 0; a < 3; ++a) {
      BigInt x = denominator_of(array.base(), a, b);
      for (Count i = 0; i < array.at(a, b); ++i) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const SolutionArray& array) {
  std::ostringstream os;
  os << '[';
  for (std::size_t b = 0; b < array.row_count(); ++b) {
    const Row& r = array.rows()[b];
    if (b) os << ',';
    os << '[' << r[0] << ',' << r[1] << ',' << r[2] << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace ufe
