#include "ufe/oracle.hpp"

#include <algorithm>

#include "ufe/errors.hpp"

namespace ufe {
namespace {

class Search {
 public:
  Search(const Base& base, std::set<Denominators>& out) : base_(base), out_(out) {}

  // Invariant: 0 < remaining <= 1 and parts_left >= 1.
  void run(const Rational& remaining, Count parts_left, const BigInt& min_denominator) {
    // 1/x <= remaining and parts_left/x >= remaining.
    BigInt lo = std::max(min_denominator, inverse(remaining).ceil());
    BigInt hi = (Rational(static_cast<std::int64_t>(parts_left)) * inverse(remaining)).floor();
    if (lo > hi) return;

    if (parts_left == 1) {
      if (remaining.numerator() != 1) return;
      const BigInt x = remaining.denominator();
      if (x < min_denominator) return;
      if (sk_elements_between(base_, x, x).empty()) return;
      current_.push_back(x);
      out_.insert(current_);
      current_.pop_back();
      return;
    }

    for (const BigInt& x : sk_elements_between(base_, lo, hi)) {
      Rational rest = remaining - Rational::unit_fraction(x);
      if (rest.sign() <= 0) continue;
      current_.push_back(x);
      run(rest, parts_left - 1, x);
      current_.pop_back();
    }
  }

 private:
  static Rational inverse(const Rational& r) { return Rational(r.denominator(), r.numerator()); }

  const Base& base_;
  std::set<Denominators>& out_;
  Denominators current_;
};

}  // namespace

std::vector<BigInt> sk_elements_between(const Base& base, const BigInt& lo, const BigInt& hi) {
  std::vector<BigInt> out;
  if (lo > hi || hi < 1) return out;
  const BigInt k(static_cast<unsigned long>(base.k()));
  // k^b <= hi bounds the exponent.
  for (BigInt power = 1; power <= hi; power *= k) {
    for (int a = 0; a <= 2; ++a) {
      BigInt x = power << a;
      if (x >= lo && x <= hi) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Denominators> brute_force(const Base& base, Count n) {
  if (n == 0) throw Error("n must be at least 1");
  std::set<Denominators> out;
  Search(base, out).run(Rational(1), n, BigInt(1));
  return out;
}

}  // namespace ufe
