#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ccert {

/// Words ordered by length, then lexicographically.
struct ShortlexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Element of the free associative Z-algebra on single-letter generators.
/// Words are strings of generator letters; the empty word is the unit.
class FreePoly {
 public:
  using Terms = std::map<std::string, mpz_class, ShortlexLess>;

  FreePoly() = default;
  static FreePoly constant(long value);
  /// Throws kInvalidArgument unless the letter is in a-z.
  static FreePoly generator(char letter);
  static FreePoly word(const std::string& letters, long coefficient = 1);

  /// Adds c * w, dropping the word if its coefficient cancels.
  void add_term(const std::string& w, const mpz_class& c);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// e.g. "xy - 2yx + 1"
  std::string to_string() const;

  friend FreePoly operator+(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator-(const FreePoly& a);
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(long c, const FreePoly& a);
  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

FreePoly bracket(const FreePoly& p, const FreePoly& q);
FreePoly power(const FreePoly& p, unsigned exponent);

/// Deletes every word that contains one of the rule words as a factor.
FreePoly reduce(const FreePoly& p, const std::vector<std::string>& zero_words);

/// Image in the free commutative algebra: letters of each word sorted.
FreePoly abelianize(const FreePoly& p);

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::size_t lhs_terms = 0;  // expanded terms of the left side
  std::size_t rhs_terms = 0;
  std::string note;
};

/// Expands each symbolic identity used in the commutator arguments and
/// compares canonical forms.
std::vector<IdentityResult> identity_suite();

}  // namespace ccert
