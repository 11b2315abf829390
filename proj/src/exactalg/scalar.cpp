#include "ccert/scalar.hpp"

#include <cctype>
#include <sstream>

#include "ccert/error.hpp"

namespace ccert {

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::kRingMismatch,
                "scalar ring mismatch: " + a.ring()->name() + " vs " + b.ring()->name());
  }
}

QuaternionParts quat_mul(const QuaternionParts& a, const QuaternionParts& b) {
  // ij = k, jk = i, ki = j
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& s) {
  if (!is_integer_text(s)) {
    throw Error(ErrorCode::kMalformedInput, "not an integer: '" + s + "'");
  }
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  mpz_class num = parse_integer(s.substr(0, slash));
  std::string den_text = s.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') {
    throw Error(ErrorCode::kMalformedInput, "bad denominator in '" + s + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorCode::kMalformedInput, "zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

/// Splits "a+b-c" into signed summands {"a", "+b", "-c"}; a sign directly
/// after '*', '^' or '/' stays inside its summand.
std::vector<std::string> split_summands(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool sign = (c == '+' || c == '-');
    bool glued = i > 0 && (s[i - 1] == '*' || s[i - 1] == '^' || s[i - 1] == '/');
    if (sign && i > 0 && !glued) {
      parts.push_back(cur);
      cur.clear();
    }
    cur.push_back(c);
  }
  parts.push_back(cur);
  for (const auto& p : parts) {
    if (p.empty() || p == "+" || p == "-") {
      throw Error(ErrorCode::kMalformedInput, "empty summand in '" + s + "'");
    }
  }
  return parts;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

bool is_nilpotent_mod(const mpz_class& c, const mpz_class& m) {
  mpz_class p = c % m;
  for (std::size_t e = 0; e <= mpz_sizeinbase(m.get_mpz_t(), 2); ++e) {
    if (p == 0) return true;
    p = (p * c) % m;
  }
  return p == 0;
}

}  // namespace

Scalar Scalar::reduce_residue(RingRef ring, mpz_class value) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), ring->modulus().get_mpz_t());
  return Scalar(ring, std::move(r));
}

Scalar Scalar::trimmed_polynomial(RingRef ring, std::vector<Scalar> coefficients) {
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
  return Scalar(ring, std::move(coefficients));
}

Scalar Scalar::zero(RingRef ring) { return from_integer(ring, mpz_class(0)); }

Scalar Scalar::one(RingRef ring) { return from_integer(ring, mpz_class(1)); }

Scalar Scalar::from_integer(RingRef ring, const mpz_class& value) {
  switch (ring->kind()) {
    case RingKind::kIntegers:
      return Scalar(ring, value);
    case RingKind::kRationals:
      return Scalar(ring, mpq_class(value));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return reduce_residue(ring, value);
    case RingKind::kPolynomial:
      return trimmed_polynomial(ring, {from_integer(ring->base(), value)});
    case RingKind::kQuaternions:
      return Scalar(ring, QuaternionParts{mpq_class(value), 0, 0, 0});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown ring kind");
}

Scalar Scalar::from_rational(RingRef ring, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (ring->kind() == RingKind::kRationals) return Scalar(ring, q);
  if (ring->kind() == RingKind::kQuaternions) {
    return Scalar(ring, QuaternionParts{q, 0, 0, 0});
  }
  if (q.get_den() == 1) return from_integer(ring, q.get_num());
  throw Error(ErrorCode::kInvalidArgument, "fraction outside Q or H");
}

Scalar Scalar::quaternion(QuaternionParts parts) {
  parts.w.canonicalize();
  parts.x.canonicalize();
  parts.y.canonicalize();
  parts.z.canonicalize();
  return Scalar(Ring::quaternions(), std::move(parts));
}

Scalar Scalar::polynomial(RingRef ring, std::vector<Scalar> coefficients) {
  if (ring->kind() != RingKind::kPolynomial) {
    throw Error(ErrorCode::kInvalidArgument, "not a polynomial ring");
  }
  for (const auto& c : coefficients) {
    if (c.ring() != ring->base()) {
      throw Error(ErrorCode::kRingMismatch, "coefficient outside polynomial base ring");
    }
  }
  return trimmed_polynomial(ring, std::move(coefficients));
}

bool Scalar::is_zero() const {
  switch (ring_->kind()) {
    case RingKind::kIntegers:
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return std::get<mpz_class>(payload_) == 0;
    case RingKind::kRationals:
      return std::get<mpq_class>(payload_) == 0;
    case RingKind::kPolynomial:
      return std::get<std::vector<Scalar>>(payload_).empty();
    case RingKind::kQuaternions: {
      const auto& q = std::get<QuaternionParts>(payload_);
      return q.w == 0 && q.x == 0 && q.y == 0 && q.z == 0;
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

const mpz_class& Scalar::integer() const {
  if (const auto* v = std::get_if<mpz_class>(&payload_)) return *v;
  throw Error(ErrorCode::kInvalidArgument, "scalar has no integer payload");
}

const mpq_class& Scalar::rational() const {
  if (const auto* v = std::get_if<mpq_class>(&payload_)) return *v;
  throw Error(ErrorCode::kInvalidArgument, "scalar has no rational payload");
}

const QuaternionParts& Scalar::quaternion_parts() const {
  if (const auto* v = std::get_if<QuaternionParts>(&payload_)) return *v;
  throw Error(ErrorCode::kInvalidArgument, "scalar is not a quaternion");
}

const std::vector<Scalar>& Scalar::coefficients() const {
  if (const auto* v = std::get_if<std::vector<Scalar>>(&payload_)) return *v;
  throw Error(ErrorCode::kInvalidArgument, "scalar is not a polynomial");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  RingRef r = a.ring();
  switch (r->kind()) {
    case RingKind::kIntegers:
      return Scalar(r, mpz_class(a.integer() + b.integer()));
    case RingKind::kRationals:
      return Scalar(r, mpq_class(a.rational() + b.rational()));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: {
      mpz_class s = a.integer() + b.integer();
      if (s >= r->modulus()) s -= r->modulus();
      return Scalar(r, std::move(s));
    }
    case RingKind::kPolynomial: {
      const auto& x = a.coefficients();
      const auto& y = b.coefficients();
      std::vector<Scalar> out;
      out.reserve(std::max(x.size(), y.size()));
      for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        if (i >= x.size()) out.push_back(y[i]);
        else if (i >= y.size()) out.push_back(x[i]);
        else out.push_back(x[i] + y[i]);
      }
      return Scalar::trimmed_polynomial(r, std::move(out));
    }
    case RingKind::kQuaternions: {
      const auto& p = a.quaternion_parts();
      const auto& q = b.quaternion_parts();
      return Scalar(r, QuaternionParts{p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z});
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown ring kind");
}

Scalar operator-(const Scalar& a) {
  RingRef r = a.ring();
  switch (r->kind()) {
    case RingKind::kIntegers:
      return Scalar(r, mpz_class(-a.integer()));
    case RingKind::kRationals:
      return Scalar(r, mpq_class(-a.rational()));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return a.integer() == 0 ? a : Scalar(r, mpz_class(r->modulus() - a.integer()));
    case RingKind::kPolynomial: {
      std::vector<Scalar> out;
      out.reserve(a.coefficients().size());
      for (const auto& c : a.coefficients()) out.push_back(-c);
      return Scalar(r, std::move(out));
    }
    case RingKind::kQuaternions: {
      const auto& p = a.quaternion_parts();
      return Scalar(r, QuaternionParts{-p.w, -p.x, -p.y, -p.z});
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown ring kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  RingRef r = a.ring();
  switch (r->kind()) {
    case RingKind::kIntegers:
      return Scalar(r, mpz_class(a.integer() * b.integer()));
    case RingKind::kRationals:
      return Scalar(r, mpq_class(a.rational() * b.rational()));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return Scalar::reduce_residue(r, a.integer() * b.integer());
    case RingKind::kPolynomial: {
      const auto& x = a.coefficients();
      const auto& y = b.coefficients();
      if (x.empty() || y.empty()) return Scalar::zero(r);
      std::vector<Scalar> out(x.size() + y.size() - 1, Scalar::zero(r->base()));
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
          if (y[j].is_zero()) continue;
          out[i + j] += x[i] * y[j];
        }
      }
      return Scalar::trimmed_polynomial(r, std::move(out));
    }
    case RingKind::kQuaternions:
      return Scalar(r, quat_mul(a.quaternion_parts(), b.quaternion_parts()));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown ring kind");
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  return a.payload_ == b.payload_;
}

std::optional<Scalar> Scalar::try_invert() const {
  switch (ring_->kind()) {
    case RingKind::kIntegers: {
      const auto& v = integer();
      if (v == 1 || v == -1) return *this;
      return std::nullopt;
    }
    case RingKind::kRationals:
      if (rational() == 0) return std::nullopt;
      return Scalar(ring_, mpq_class(1 / rational()));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), integer().get_mpz_t(),
                     ring_->modulus().get_mpz_t()) == 0) {
        return std::nullopt;
      }
      return reduce_residue(ring_, inv);
    }
    case RingKind::kPolynomial: {
      // Units of B[x] for commutative B: a unit constant term plus nilpotent
      // higher coefficients.
      const auto& c = coefficients();
      if (c.empty()) return std::nullopt;
      auto lead_inv = c[0].try_invert();
      if (!lead_inv) return std::nullopt;
      if (c.size() == 1) return trimmed_polynomial(ring_, {*lead_inv});
      if (!ring_->base()->is_residue_ring()) return std::nullopt;
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (!is_nilpotent_mod(c[i].integer(), ring_->base()->modulus())) return std::nullopt;
      }
      // f = c0 (1 + g) with g nilpotent: f^-1 = c0^-1 * sum_k (-g)^k.
      Scalar c0_inv = trimmed_polynomial(ring_, {*lead_inv});
      Scalar g = c0_inv * *this - one(ring_);
      Scalar minus_g = -g;
      Scalar sum = one(ring_);
      Scalar power = one(ring_);
      for (;;) {
        power = power * minus_g;
        if (power.is_zero()) break;
        sum += power;
      }
      return sum * c0_inv;
    }
    case RingKind::kQuaternions: {
      const auto& q = quaternion_parts();
      mpq_class norm = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
      if (norm == 0) return std::nullopt;
      return quaternion({q.w / norm, -q.x / norm, -q.y / norm, -q.z / norm});
    }
  }
  return std::nullopt;
}

std::string Scalar::to_string() const {
  switch (ring_->kind()) {
    case RingKind::kIntegers:
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return integer().get_str();
    case RingKind::kRationals:
      return rational_text(rational());
    case RingKind::kPolynomial: {
      const auto& c = coefficients();
      if (c.empty()) return "0";
      std::string out;
      for (std::size_t e = c.size(); e-- > 0;) {
        if (c[e].is_zero()) continue;
        std::string term;
        if (e == 0) {
          term = c[e].to_string();
        } else {
          std::string coef = c[e].to_string();
          if (coef == "1") coef.clear();
          else if (coef == "-1") coef = "-";
          else coef += "*";
          term = coef + ring_->variable() + (e > 1 ? "^" + std::to_string(e) : "");
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
      }
      return out;
    }
    case RingKind::kQuaternions: {
      const auto& q = quaternion_parts();
      std::string out = rational_text(q.w);
      const std::pair<const mpq_class*, char> units[] = {{&q.x, 'i'}, {&q.y, 'j'}, {&q.z, 'k'}};
      for (const auto& [value, unit] : units) {
        std::string term;
        if (*value == 1) term = std::string(1, unit);
        else if (*value == -1) term = std::string("-") + unit;
        else term = rational_text(*value) + unit;
        if (term[0] != '-') out += "+";
        out += term;
      }
      return out;
    }
  }
  return "?";
}

Scalar Scalar::parse(RingRef ring, const std::string& raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw Error(ErrorCode::kMalformedInput, "empty scalar");
  switch (ring->kind()) {
    case RingKind::kIntegers:
      return Scalar(ring, parse_integer(text));
    case RingKind::kRationals:
      return Scalar(ring, parse_rational(text));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return reduce_residue(ring, parse_integer(text));
    case RingKind::kPolynomial: {
      const std::string& var = ring->variable();
      std::vector<Scalar> coeffs;
      for (const std::string& part : split_summands(text)) {
        std::string body = part;
        bool negative = false;
        if (body[0] == '+' || body[0] == '-') {
          negative = body[0] == '-';
          body = body.substr(1);
        }
        std::size_t at = body.find(var);
        std::size_t degree = 0;
        Scalar coef = one(ring->base());
        if (at == std::string::npos) {
          coef = parse(ring->base(), body);
        } else {
          std::string head = body.substr(0, at);
          std::string tail = body.substr(at + var.size());
          if (!head.empty()) {
            if (head.back() != '*') {
              throw Error(ErrorCode::kMalformedInput, "expected '*' before variable in '" + part + "'");
            }
            coef = parse(ring->base(), head.substr(0, head.size() - 1));
          }
          degree = 1;
          if (!tail.empty()) {
            if (tail[0] != '^' || tail.size() < 2 || !is_integer_text(tail.substr(1)) ||
                tail[1] == '-' || tail[1] == '+') {
              throw Error(ErrorCode::kMalformedInput, "bad exponent in '" + part + "'");
            }
            mpz_class e = parse_integer(tail.substr(1));
            if (e > 4096) throw Error(ErrorCode::kMalformedInput, "exponent too large");
            degree = e.get_ui();
          }
        }
        if (negative) coef = -coef;
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, zero(ring->base()));
        coeffs[degree] += coef;
      }
      return trimmed_polynomial(ring, std::move(coeffs));
    }
    case RingKind::kQuaternions: {
      QuaternionParts q{0, 0, 0, 0};
      for (const std::string& part : split_summands(text)) {
        char unit = part.back();
        mpq_class* slot = &q.w;
        std::string coef = part;
        if (unit == 'i' || unit == 'j' || unit == 'k') {
          slot = unit == 'i' ? &q.x : unit == 'j' ? &q.y : &q.z;
          coef = part.substr(0, part.size() - 1);
          if (!coef.empty() && coef.back() == '*') coef.pop_back();
          if (coef.empty() || coef == "+") coef = "1";
          else if (coef == "-") coef = "-1";
        }
        *slot += parse_rational(coef);
      }
      return quaternion(std::move(q));
    }
  }
  throw Error(ErrorCode::kMalformedInput, "unknown ring kind");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ccert
