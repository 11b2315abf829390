#include <algorithm>
#include <random>
#include <regex>

#include "ccert/error.hpp"
#include "ccert/explore.hpp"
#include "explore_internal.hpp"

namespace ccert {

namespace {

using Index = FiniteRing::Index;

[[noreturn]] void axiom_failure(const std::string& name, const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "tables for " + name + " violate " + what);
}

std::vector<std::uint64_t> prime_power(unsigned q) {
  // returns {p, e} or empty
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned e = 0;
    unsigned rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) return {};
    return {p, e};
  }
  return {};
}

/// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<unsigned>;

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  // m monic
  while (a.size() >= m.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p * p - (lead * m[i]) % p) % p;
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
  Poly r = poly_mod(f, g, p);
  return std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; });
}

/// Monic polynomials of the given degree, in lexicographic order of the
/// lower coefficients.
std::vector<Poly> monic_polys(unsigned p, unsigned degree) {
  std::vector<Poly> out;
  unsigned count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (unsigned code = 0; code < count; ++code) {
    Poly f(degree + 1, 0);
    unsigned c = code;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[degree] = 1;
    out.push_back(f);
  }
  return out;
}

Poly irreducible(unsigned p, unsigned degree) {
  for (const Poly& f : monic_polys(p, degree)) {
    bool reducible = false;
    for (unsigned d = 1; d <= degree / 2 && !reducible; ++d) {
      for (const Poly& g : monic_polys(p, d)) {
        if (divides(g, f, p)) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

std::string poly_label(const Poly& digits) {
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(digits[i]);
    } else {
      term = (digits[i] == 1 ? "" : std::to_string(digits[i]) + "*") + "w" +
             (i == 1 ? "" : "^" + std::to_string(i));
    }
    out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

CoefficientRing residue_ring(unsigned m) {
  CoefficientRing r{"Z" + std::to_string(m), m, {}, {}, {}};
  r.add.resize(m * m);
  r.mul.resize(m * m);
  for (unsigned a = 0; a < m; ++a) {
    r.labels.push_back(std::to_string(a));
    for (unsigned b = 0; b < m; ++b) {
      r.add[a * m + b] = static_cast<std::uint8_t>((a + b) % m);
      r.mul[a * m + b] = static_cast<std::uint8_t>((a * b) % m);
    }
  }
  return r;
}

CoefficientRing galois_field(unsigned q) {
  auto pe = prime_power(q);
  if (pe.empty()) throw Error(ErrorCode::kUnknownRingSpec, "F" + std::to_string(q) + ": not a prime power");
  const unsigned p = static_cast<unsigned>(pe[0]);
  const unsigned e = static_cast<unsigned>(pe[1]);
  if (e == 1) {
    CoefficientRing r = residue_ring(p);
    r.name = "F" + std::to_string(p);
    return r;
  }
  const Poly modulus = irreducible(p, e);
  auto digits = [&](unsigned code) {
    Poly d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return d;
  };
  auto encode = [&](const Poly& d) {
    unsigned code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
  };
  CoefficientRing r{"F" + std::to_string(q), q, {}, {}, {}};
  r.add.resize(q * q);
  r.mul.resize(q * q);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits(a);
    r.labels.push_back(poly_label(da));
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits(b);
      Poly sum(e), prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
      for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly reduced = poly_mod(prod, modulus, p);
      reduced.resize(e, 0);
      r.add[a * q + b] = static_cast<std::uint8_t>(encode(sum));
      r.mul[a * q + b] = static_cast<std::uint8_t>(encode(reduced));
    }
  }
  return r;
}

}  // namespace

CoefficientRing coefficient_ring(const std::string& spec) {
  static const std::regex pattern(R"(([ZF])([0-9]+))");
  std::smatch m;
  if (!std::regex_match(spec, m, pattern) || m[2].length() > 3) {
    throw Error(ErrorCode::kUnknownRingSpec, "unknown coefficient ring '" + spec + "'");
  }
  const unsigned value = static_cast<unsigned>(std::stoul(m[2].str()));
  if (value < 2 || value > 64) {
    throw Error(ErrorCode::kUnknownRingSpec, "coefficient ring size must lie in 2..64: '" + spec + "'");
  }
  return m[1] == "Z" ? residue_ring(value) : galois_field(value);
}

MatrixTableRing::MatrixTableRing(CoefficientRing coefficients, std::size_t n, Shape shape)
    : k_(coefficients), n_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (shape == Shape::kFull || (shape == Shape::kUpper && i <= j) ||
          (shape == Shape::kStrictUpper && i < j)) {
        cells_.push_back(i * n + j);
      }
    }
  }
  size_ = 1;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    size_ *= k_.size;
    if (size_ > FiniteRing::kMaxSize) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ring has more than " + std::to_string(FiniteRing::kMaxSize) + " elements");
    }
  }
}

std::vector<std::uint8_t> MatrixTableRing::decode(std::size_t index) const {
  std::vector<std::uint8_t> entries(n_ * n_, 0);
  for (std::size_t cell : cells_) {
    entries[cell] = static_cast<std::uint8_t>(index % k_.size);
    index /= k_.size;
  }
  return entries;
}

std::size_t MatrixTableRing::encode(const std::vector<std::uint8_t>& entries) const {
  std::size_t index = 0;
  for (std::size_t c = cells_.size(); c-- > 0;) index = index * k_.size + entries[cells_[c]];
  return index;
}

FiniteRing MatrixTableRing::build(const std::string& name, bool has_one) const {
  std::vector<std::vector<std::uint8_t>> decoded(size_);
  for (std::size_t i = 0; i < size_; ++i) decoded[i] = decode(i);
  std::vector<Index> add(size_ * size_), mul(size_ * size_);
  std::vector<std::uint8_t> sum(n_ * n_), prod(n_ * n_);
  for (std::size_t a = 0; a < size_; ++a) {
    const auto& da = decoded[a];
    for (std::size_t b = 0; b < size_; ++b) {
      const auto& db = decoded[b];
      for (std::size_t c = 0; c < n_ * n_; ++c) sum[c] = k_.plus(da[c], db[c]);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          std::uint8_t acc = 0;
          for (std::size_t l = 0; l < n_; ++l) {
            acc = k_.plus(acc, k_.times(da[i * n_ + l], db[l * n_ + j]));
          }
          prod[i * n_ + j] = acc;
        }
      }
      add[a * size_ + b] = static_cast<Index>(encode(sum));
      mul[a * size_ + b] = static_cast<Index>(encode(prod));
    }
  }
  std::vector<std::string> labels(size_);
  for (std::size_t a = 0; a < size_; ++a) {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) {
        s += (j ? "," : "") + k_.labels[decoded[a][i * n_ + j]];
      }
      s += "]";
    }
    labels[a] = s + "]";
  }
  std::optional<Index> one;
  if (has_one) {
    std::vector<std::uint8_t> id(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = 1;
    one = static_cast<Index>(encode(id));
  }
  return FiniteRing::from_tables(name, size_, std::move(add), std::move(mul), 0, one,
                                 std::move(labels));
}

FiniteRing FiniteRing::from_tables(std::string name, std::size_t size, std::vector<Index> add,
                                   std::vector<Index> mul, Index zero, std::optional<Index> one,
                                   std::vector<std::string> labels) {
  if (size == 0 || size > kMaxSize) {
    throw Error(ErrorCode::kMalformedInput, "ring size must lie in 1.." + std::to_string(kMaxSize));
  }
  if (add.size() != size * size || mul.size() != size * size) {
    throw Error(ErrorCode::kMalformedInput, "tables must have size*size entries");
  }
  auto in_range = [&](Index v) { return v < size; };
  if (!std::all_of(add.begin(), add.end(), in_range) ||
      !std::all_of(mul.begin(), mul.end(), in_range) || zero >= size ||
      (one && *one >= size)) {
    throw Error(ErrorCode::kMalformedInput, "table entry out of range");
  }
  if (!labels.empty() && labels.size() != size) {
    throw Error(ErrorCode::kMalformedInput, "label count differs from ring size");
  }
  FiniteRing r;
  r.name_ = std::move(name);
  r.size_ = size;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.zero_ = zero;
  r.one_ = one;
  r.labels_ = std::move(labels);
  r.neg_.assign(size, 0);

  for (std::size_t a = 0; a < size; ++a) {
    const Index ia = static_cast<Index>(a);
    if (r.add(ia, zero) != ia) axiom_failure(r.name_, "the additive identity");
    if (one && (r.mul(ia, *one) != ia || r.mul(*one, ia) != ia)) {
      axiom_failure(r.name_, "the multiplicative identity");
    }
    bool found = false;
    for (std::size_t b = 0; b < size; ++b) {
      const Index ib = static_cast<Index>(b);
      if (r.add(ia, ib) != r.add(ib, ia)) axiom_failure(r.name_, "commutativity of addition");
      if (r.add(ia, ib) == zero) {
        r.neg_[a] = ib;
        found = true;
      }
    }
    if (!found) axiom_failure(r.name_, "existence of additive inverses");
  }

  auto check_triple = [&](Index a, Index b, Index c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) axiom_failure(r.name_, "associativity of addition");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
      axiom_failure(r.name_, "associativity of multiplication");
    }
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) ||
        r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
      axiom_failure(r.name_, "distributivity");
    }
  };
  if (size <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        for (std::size_t c = 0; c < size; ++c)
          check_triple(static_cast<Index>(a), static_cast<Index>(b), static_cast<Index>(c));
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (std::size_t t = 0; t < kSampledTriples; ++t) {
      check_triple(static_cast<Index>(pick(rng)), static_cast<Index>(pick(rng)),
                   static_cast<Index>(pick(rng)));
    }
  }
  return r;
}

FiniteRing FiniteRing::generate(const std::string& spec) {
  static const std::regex matrix_pattern(R"(([MUN])([0-9]+)\(([ZF][0-9]+)\))");
  std::smatch m;
  if (spec == "0") {
    return from_tables("0", 1, {0}, {0}, 0, Index{0}, {"0"});
  }
  if (std::regex_match(spec, m, matrix_pattern)) {
    if (m[2].length() > 2) throw Error(ErrorCode::kUnknownRingSpec, "matrix size too large in '" + spec + "'");
    const std::size_t n = std::stoul(m[2].str());
    if (n < 1) throw Error(ErrorCode::kUnknownRingSpec, "matrix size must be positive in '" + spec + "'");
    const char kind = m[1].str()[0];
    const auto shape = kind == 'M'   ? MatrixTableRing::Shape::kFull
                       : kind == 'U' ? MatrixTableRing::Shape::kUpper
                                     : MatrixTableRing::Shape::kStrictUpper;
    MatrixTableRing builder(coefficient_ring(m[3].str()), n, shape);
    return builder.build(spec, kind != 'N');
  }
  CoefficientRing k = coefficient_ring(spec);
  std::vector<Index> add(k.size * k.size), mul(k.size * k.size);
  for (std::size_t i = 0; i < add.size(); ++i) {
    add[i] = k.add[i];
    mul[i] = k.mul[i];
  }
  return from_tables(k.name, k.size, std::move(add), std::move(mul), 0, Index{1}, k.labels);
}

std::string FiniteRing::label(Index a) const {
  return labels_.empty() ? "#" + std::to_string(a) : labels_.at(a);
}

}  // namespace ccert
