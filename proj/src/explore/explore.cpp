#include <bit>

#include "ccert/error.hpp"
#include "ccert/explore.hpp"
#include "explore_internal.hpp"

namespace ccert {

using Index = FiniteRing::Index;

bool Subset::insert(std::size_t i) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (bits_[i / 64] & mask) return false;
  bits_[i / 64] |= mask;
  return true;
}

std::size_t Subset::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Index> Subset::members() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(static_cast<Index>(i));
  }
  return out;
}

namespace {

std::vector<Index> all_elements(const FiniteRing& r) {
  std::vector<Index> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<Index>(i);
  return out;
}

Subset singleton_zero(const FiniteRing& r) {
  Subset s(r.size());
  s.insert(r.zero());
  return s;
}

}  // namespace

Subset commutator_set(const FiniteRing& ring) {
  Subset out(ring.size());
  for (std::size_t a = 0; a < ring.size(); ++a) {
    for (std::size_t b = a; b < ring.size(); ++b) {
      out.insert(ring.commutator(static_cast<Index>(a), static_cast<Index>(b)));
    }
  }
  // [b, a] = -[a, b]
  for (Index c : out.members()) out.insert(ring.neg(c));
  return out;
}

Subset pair_products(const FiniteRing& ring) {
  const auto l0 = commutator_set(ring).members();
  Subset out(ring.size());
  for (Index a : l0)
    for (Index b : l0) out.insert(ring.mul(a, b));
  return out;
}

Subset additive_closure(const FiniteRing& ring, const Subset& seed) {
  const auto generators = seed.members();
  Subset out = singleton_zero(ring);
  std::vector<Index> frontier{ring.zero()};
  while (!frontier.empty()) {
    const Index x = frontier.back();
    frontier.pop_back();
    for (Index g : generators) {
      const Index y = ring.add(x, g);
      if (out.insert(y)) frontier.push_back(y);
    }
  }
  return out;
}

Subset sumset(const FiniteRing& ring, const Subset& a, const Subset& b) {
  const auto bm = b.members();
  Subset out(ring.size());
  for (Index x : a.members())
    for (Index y : bm) out.insert(ring.add(x, y));
  return out;
}

Subset ideal_closure(const FiniteRing& ring, const Subset& seed, bool unital_hull) {
  const auto elements = all_elements(ring);
  if (!unital_hull) {
    Subset left(ring.size());
    for (Index s : seed.members())
      for (Index r : elements) left.insert(ring.mul(r, s));
    Subset both(ring.size());
    for (Index x : left.members())
      for (Index r : elements) both.insert(ring.mul(x, r));
    return additive_closure(ring, both);
  }
  Subset current = additive_closure(ring, seed);
  while (true) {
    Subset grown = current;
    for (Index x : current.members()) {
      for (Index r : elements) {
        grown.insert(ring.mul(r, x));
        grown.insert(ring.mul(x, r));
      }
    }
    grown = additive_closure(ring, grown);
    if (grown == current) return current;
    current = std::move(grown);
  }
}

bool is_nil(const FiniteRing& ring, const Subset& subset) {
  for (Index x : subset.members()) {
    Index power = x;
    bool reached = false;
    for (std::size_t k = 0; k <= ring.size(); ++k) {
      if (power == ring.zero()) {
        reached = true;
        break;
      }
      power = ring.mul(power, x);
    }
    if (!reached) return false;
  }
  return true;
}

bool is_semiprime(const FiniteRing& ring) {
  for (std::size_t a = 0; a < ring.size(); ++a) {
    const Index ia = static_cast<Index>(a);
    if (ia == ring.zero()) continue;
    bool witness = false;
    for (std::size_t r = 0; r < ring.size() && !witness; ++r) {
      witness = ring.mul(ring.mul(ia, static_cast<Index>(r)), ia) != ring.zero();
    }
    if (!witness) return false;
  }
  return true;
}

XiResult xi_exact(const FiniteRing& ring, unsigned cap) {
  XiResult result;
  const Subset l0 = commutator_set(ring);
  const Subset products = pair_products(ring);
  result.commutator_count = l0.count();
  result.pair_product_count = products.count();
  Subset reached = products;
  for (unsigned n = 1;; ++n) {
    result.sumset_sizes.push_back(reached.count());
    if (reached.full()) {
      result.status = XiResult::Status::kValue;
      result.value = n;
      return result;
    }
    if (n >= cap) {
      result.status = XiResult::Status::kCapReached;
      return result;
    }
    Subset next = sumset(ring, reached, products);
    if (next == reached) {
      result.status = XiResult::Status::kNotGenerated;
      return result;
    }
    reached = std::move(next);
  }
}

Section2Report check_section2(const FiniteRing& ring) {
  Section2Report report;
  const auto elements = all_elements(ring);
  const auto l0 = commutator_set(ring).members();
  const auto products = pair_products(ring).members();
  const Index zero = ring.zero();

  report.commutative = true;
  for (Index a : elements)
    for (Index b : elements) report.commutative = report.commutative && ring.mul(a, b) == ring.mul(b, a);

  // bilinearity reduces each condition to generators
  auto all_commute = [&](const std::vector<Index>& xs, const std::vector<Index>& ys) {
    for (Index x : xs)
      for (Index y : ys)
        if (ring.commutator(x, y) != zero) return false;
    return true;
  };
  report.commutators_central = all_commute(l0, elements);
  report.commutes_with_squares = all_commute(l0, products);
  report.commutators_commute = all_commute(l0, l0);
  report.semiprime = is_semiprime(ring);

  Subset generators(ring.size());
  for (Index c : l0) generators.insert(c);
  const Subset ideal = ideal_closure(ring, generators, true);
  report.commutator_ideal_size = ideal.count();
  report.commutator_ideal_nil = is_nil(ring, ideal);

  if (report.semiprime) {
    const bool c1 = report.commutative;
    report.equivalence_holds = c1 == report.commutators_central &&
                               c1 == report.commutes_with_squares &&
                               c1 == report.commutators_commute;
  }
  report.nil_implication_holds = !report.commutes_with_squares || report.commutator_ideal_nil;
  return report;
}

Example22Report example22_check(unsigned field_size) {
  if (field_size != 2 && field_size != 4) {
    throw Error(ErrorCode::kInvalidArgument, "field size must be 2 or 4");
  }
  const std::string k = "F" + std::to_string(field_size);
  MatrixTableRing builder(coefficient_ring(k), 2, MatrixTableRing::Shape::kFull);
  const FiniteRing ring = builder.build("M2(" + k + ")", true);
  const auto elements = all_elements(ring);

  std::vector<Index> lie, scalars;
  Subset lie_set(ring.size());
  for (std::uint8_t mu = 0; mu < field_size; ++mu) {
    scalars.push_back(static_cast<Index>(builder.encode({mu, 0, 0, mu})));
    for (std::uint8_t lambda = 0; lambda < field_size; ++lambda) {
      const auto idx = static_cast<Index>(builder.encode({mu, lambda, lambda, mu}));
      lie.push_back(idx);
      lie_set.insert(idx);
    }
  }

  Example22Report report;
  report.field_size = field_size;
  report.lie_ideal = true;
  report.abelian = true;
  report.scalar_control_central = true;
  for (Index l : lie) {
    for (Index r : elements) {
      const Index c = ring.commutator(l, r);
      report.lie_ideal = report.lie_ideal && lie_set.contains(c);
      report.not_central = report.not_central || c != ring.zero();
    }
    for (Index m : lie) report.abelian = report.abelian && ring.commutator(l, m) == ring.zero();
  }
  for (Index s : scalars)
    for (Index r : elements)
      report.scalar_control_central = report.scalar_control_central && ring.commutator(s, r) == ring.zero();
  return report;
}

RadicalPowerReport radical_power_check(const FiniteRing& ring) {
  const Subset ideal = ideal_closure(ring, commutator_set(ring), true);
  const Subset closure = additive_closure(ring, pair_products(ring));
  RadicalPowerReport report;
  report.ideal_size = ideal.count();
  report.closure_size = closure.count();
  for (Index a : ideal.members()) {
    Index power = a;
    unsigned found = 0;
    for (unsigned m = 1; m <= ring.size(); ++m) {
      if (closure.contains(power)) {
        found = m;
        break;
      }
      power = ring.mul(power, a);
    }
    if (found == 0) {
      throw Error(ErrorCode::kCounterexampleFound,
                  "no power of " + ring.label(a) + " lies in the span of commutator products");
    }
    report.max_exponent = std::max(report.max_exponent, found);
    ++report.exponent_histogram[found];
  }
  return report;
}

}  // namespace ccert
