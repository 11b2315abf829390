#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccert {

/// Finite ring presented by addition and multiplication tables over the
/// index set 0..size-1.
class FiniteRing {
 public:
  using Index = std::uint16_t;
  static constexpr std::size_t kMaxSize = 4096;
  /// Rings up to this size have every axiom checked on every triple.
  static constexpr std::size_t kExhaustiveLimit = 256;
  static constexpr std::size_t kSampledTriples = 1000000;

  /// Validates the tables (abelian group, associativity, distributivity, unit).
  /// Throws kMalformedInput when an axiom fails.
  static FiniteRing from_tables(std::string name, std::size_t size,
                                std::vector<Index> add, std::vector<Index> mul, Index zero,
                                std::optional<Index> one,
                                std::vector<std::string> labels = {});

  /// Generators:
  ///   Z<m>, F<q> (q a prime power), M<n>(K), U<n>(K) upper triangular,
  ///   N<n>(K) strictly upper triangular (non-unital), "0" the zero ring,
  /// where K is Z<m> or F<q>. Throws kUnknownRingSpec.
  static FiniteRing generate(const std::string& spec);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  Index zero() const noexcept { return zero_; }
  const std::optional<Index>& one() const noexcept { return one_; }
  Index add(Index a, Index b) const { return add_[a * size_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * size_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index commutator(Index a, Index b) const { return sub(mul(a, b), mul(b, a)); }
  /// Human-readable element, e.g. "[[1,0],[0,1]]".
  std::string label(Index a) const;

 private:
  std::string name_;
  std::size_t size_ = 0;
  std::vector<Index> add_, mul_, neg_;
  Index zero_ = 0;
  std::optional<Index> one_;
  std::vector<std::string> labels_;
};

/// Bit set over the element indices of one ring.
class Subset {
 public:
  explicit Subset(std::size_t universe = 0) : universe_(universe), bits_((universe + 63) / 64) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  /// Returns true if i was newly added.
  bool insert(std::size_t i);
  std::size_t count() const;
  bool full() const { return count() == universe_; }
  std::vector<FiniteRing::Index> members() const;
  friend bool operator==(const Subset& a, const Subset& b) { return a.bits_ == b.bits_; }

 private:
  std::size_t universe_;
  std::vector<std::uint64_t> bits_;
};

/// {xy - yx : x, y in R}
Subset commutator_set(const FiniteRing& ring);
/// {xy : x, y in L0} for L0 the commutator set.
Subset pair_products(const FiniteRing& ring);
/// Smallest additive subgroup containing the seed.
Subset additive_closure(const FiniteRing& ring, const Subset& seed);
/// {a + b : a in A, b in B}
Subset sumset(const FiniteRing& ring, const Subset& a, const Subset& b);

/// unital_hull = true: the two-sided ideal generated by the seed (closure
/// under R-multiplication and the formal unit, so it contains the seed).
/// unital_hull = false: the additive span of R seed R.
Subset ideal_closure(const FiniteRing& ring, const Subset& seed, bool unital_hull);

/// Every element is nilpotent with exponent at most |R|.
bool is_nil(const FiniteRing& ring, const Subset& subset);
/// a R a = {0} forces a = 0.
bool is_semiprime(const FiniteRing& ring);

struct XiResult {
  enum class Status { kValue, kNotGenerated, kCapReached };
  Status status = Status::kNotGenerated;
  unsigned value = 0;  // meaningful for kValue
  std::size_t commutator_count = 0;
  std::size_t pair_product_count = 0;
  std::vector<std::size_t> sumset_sizes;  // |sum^N L0^2| for N = 1, 2, ...
};

/// Least N <= cap with R = sum^N L0^2, by iterated sumset saturation.
XiResult xi_exact(const FiniteRing& ring, unsigned cap);

struct Section2Report {
  bool commutative = false;          // (1) R commutative
  bool commutators_central = false;  // (2) [[R,R],R] = 0
  bool commutes_with_squares = false;  // (3) [[R,R],[R,R]^2] = 0
  bool commutators_commute = false;  // (4) [[R,R],[R,R]] = 0
  bool semiprime = false;
  std::size_t commutator_ideal_size = 0;
  bool commutator_ideal_nil = false;
  /// On semiprime rings the four conditions must agree.
  bool equivalence_holds = true;
  /// (3) must force a nil commutator ideal.
  bool nil_implication_holds = true;

  bool ok() const { return equivalence_holds && nil_implication_holds; }
};

Section2Report check_section2(const FiniteRing& ring);

struct Example22Report {
  std::size_t field_size = 0;
  bool lie_ideal = false;        // [L, R] inside L
  bool abelian = false;          // [L, L] = 0
  bool not_central = false;      // [L, R] != 0
  bool scalar_control_central = false;  // scalar matrices give [L, R] = 0

  bool ok() const { return lie_ideal && abelian && not_central && scalar_control_central; }
};

/// L = {(mu lambda; lambda mu)} in M2(F) for F of characteristic 2 with 2 or
/// 4 elements. Throws kInvalidArgument for other sizes.
Example22Report example22_check(unsigned field_size);

struct RadicalPowerReport {
  std::size_t ideal_size = 0;
  std::size_t closure_size = 0;   // additive closure of L0^2
  unsigned max_exponent = 0;
  std::map<unsigned, std::size_t> exponent_histogram;  // m -> element count
};

/// For each a in the commutator ideal, the least m with a^m in the additive
/// closure of L0^2. Throws kCounterexampleFound if some a has none.
RadicalPowerReport radical_power_check(const FiniteRing& ring);

}  // namespace ccert
