#include "ccert/ring.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "ccert/error.hpp"

namespace ccert {

Ring::Ring(RingKind kind, mpz_class modulus, RingRef base, std::string variable,
           std::string name)
    : kind_(kind),
      modulus_(std::move(modulus)),
      base_(base),
      variable_(std::move(variable)),
      name_(std::move(name)) {}

RingRef Ring::intern(RingKind kind, const mpz_class& modulus, RingRef base,
                     const std::string& variable, const std::string& name) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<Ring>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  for (const auto& r : registry) {
    if (r->kind_ == kind && r->modulus_ == modulus && r->base_ == base &&
        r->variable_ == variable) {
      return r.get();
    }
  }
  registry.push_back(std::unique_ptr<Ring>(new Ring(kind, modulus, base, variable, name)));
  return registry.back().get();
}

RingRef Ring::integers() {
  static const RingRef r = intern(RingKind::kIntegers, 0, nullptr, "", "Z");
  return r;
}

RingRef Ring::rationals() {
  static const RingRef r = intern(RingKind::kRationals, 0, nullptr, "", "Q");
  return r;
}

RingRef Ring::integers_mod(const mpz_class& m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "Zm requires m >= 2");
  return intern(RingKind::kIntegersMod, m, nullptr, "", "Z" + m.get_str());
}

RingRef Ring::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Fp requires p prime, got " + p.get_str());
  }
  return intern(RingKind::kPrimeField, p, nullptr, "", "F" + p.get_str());
}

RingRef Ring::polynomial(RingRef base, const std::string& variable) {
  if (base == nullptr || base->kind() == RingKind::kPolynomial ||
      base->kind() == RingKind::kQuaternions) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial base must be Z, Q, Zm or Fp");
  }
  if (variable.empty() || variable == "i" || variable == "j" || variable == "k") {
    throw Error(ErrorCode::kInvalidArgument, "bad polynomial variable name");
  }
  for (char c : variable) {
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kInvalidArgument, "bad polynomial variable name");
    }
  }
  return intern(RingKind::kPolynomial, 0, base, variable,
                base->name() + "[" + variable + "]");
}

RingRef Ring::quaternions() {
  static const RingRef r = intern(RingKind::kQuaternions, 0, nullptr, "", "H");
  return r;
}

bool Ring::is_integral_domain() const noexcept {
  switch (kind_) {
    case RingKind::kIntegers:
    case RingKind::kRationals:
    case RingKind::kPrimeField:
      return true;
    case RingKind::kIntegersMod:
      return mpz_probab_prime_p(modulus_.get_mpz_t(), 40) != 0;
    case RingKind::kPolynomial:
      return base_->is_integral_domain();
    case RingKind::kQuaternions:
      return false;
  }
  return false;
}

}  // namespace ccert
