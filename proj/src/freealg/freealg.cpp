#include "ccert/freealg.hpp"

#include <algorithm>

#include "ccert/error.hpp"

namespace ccert {

void FreePoly::add_term(const std::string& w, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FreePoly FreePoly::constant(long value) { return word("", value); }

FreePoly FreePoly::generator(char letter) { return word(std::string(1, letter)); }

FreePoly FreePoly::word(const std::string& letters, long coefficient) {
  for (char c : letters) {
    if (c < 'a' || c > 'z') throw Error(ErrorCode::kInvalidArgument, "generators are letters a-z");
  }
  FreePoly p;
  p.add_term(letters, mpz_class(coefficient));
  return p;
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str();
      out += w;
    }
  }
  return out;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
  FreePoly out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

FreePoly operator-(const FreePoly& a) {
  FreePoly out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) { return a + (-b); }

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  return out;
}

FreePoly operator*(long c, const FreePoly& a) { return FreePoly::constant(c) * a; }

FreePoly bracket(const FreePoly& p, const FreePoly& q) { return p * q - q * p; }

FreePoly power(const FreePoly& p, unsigned exponent) {
  FreePoly out = FreePoly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

FreePoly reduce(const FreePoly& p, const std::vector<std::string>& zero_words) {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) {
    const bool killed = std::any_of(zero_words.begin(), zero_words.end(), [&](const std::string& z) {
      return w.find(z) != std::string::npos;
    });
    if (!killed) out.add_term(w, c);
  }
  return out;
}

FreePoly abelianize(const FreePoly& p) {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) {
    std::string sorted = w;
    std::sort(sorted.begin(), sorted.end());
    out.add_term(sorted, c);
  }
  return out;
}

}  // namespace ccert
