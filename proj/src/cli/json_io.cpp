#include "ccert/json_io.hpp"

#include <regex>

#include "ccert/error.hpp"

namespace ccert {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

/// Non-negative count given as a JSON number or a decimal string.
std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!s.empty() && s.size() < 7 && std::all_of(s.begin(), s.end(), ::isdigit)) return std::stoul(s);
  }
  malformed(std::string("field '") + key + "' must be a non-negative integer");
}

mpz_class integer_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_number_integer()) {
    s = std::to_string(v.get<long long>());
  } else {
    malformed(std::string("field '") + key + "' must be an integer string");
  }
  mpz_class out;
  if (s.empty() || out.set_str(s, 10) != 0) malformed("invalid integer '" + s + "'");
  return out;
}

Json rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rows_from_json(RingRef ring, std::size_t n, const Json& rows) {
  if (n == 0) malformed("matrix size must be positive");
  if (!rows.is_array() || rows.size() != n) malformed("entries must list n rows");
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != n) malformed("each row must have n entries");
    for (const Json& e : row) {
      if (e.is_string()) {
        entries.push_back(Scalar::parse(ring, e.get<std::string>()));
      } else if (e.is_number_integer()) {
        entries.push_back(Scalar::from_integer(ring, mpz_class(std::to_string(e.get<long long>()))));
      } else {
        malformed("matrix entries must be strings");
      }
    }
  }
  return Matrix(ring, n, std::move(entries));
}

std::string kind_of(const Json& j) { return j.is_object() && j.contains("kind") ? string_field(j, "kind") : ""; }

}  // namespace

Json ring_to_json(RingRef ring) {
  switch (ring->kind()) {
    case RingKind::kIntegers:
      return {{"kind", "Z"}};
    case RingKind::kRationals:
      return {{"kind", "Q"}};
    case RingKind::kIntegersMod:
      return {{"kind", "Zmod"}, {"m", ring->modulus().get_str()}};
    case RingKind::kPrimeField:
      return {{"kind", "GF"}, {"p", ring->modulus().get_str()}};
    case RingKind::kPolynomial:
      return {{"kind", "Poly"}, {"base", ring_to_json(ring->base())}, {"var", ring->variable()}};
    case RingKind::kQuaternions:
      return {{"kind", "Quat"}};
  }
  malformed("unknown ring kind");
}

RingRef ring_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  try {
    if (kind == "Z") return Ring::integers();
    if (kind == "Q") return Ring::rationals();
    if (kind == "Zmod") return Ring::integers_mod(integer_string(j, "m"));
    if (kind == "GF") return Ring::prime_field(integer_string(j, "p"));
    if (kind == "Quat") return Ring::quaternions();
    if (kind == "Poly") {
      const std::string var = j.contains("var") ? string_field(j, "var") : "x";
      return Ring::polynomial(ring_from_json(field(j, "base")), var);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) throw Error(ErrorCode::kUnknownRingSpec, e.what());
    throw;
  }
  throw Error(ErrorCode::kUnknownRingSpec, "unknown ring kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
  return {{"ring", ring_to_json(m.ring())}, {"n", m.size()}, {"entries", rows_to_json(m)}};
}

Matrix matrix_from_json(const Json& j) {
  return rows_from_json(ring_from_json(field(j, "ring")), count_field(j, "n"), field(j, "entries"));
}

Json element_to_json(const RingElement& e) {
  if (e.is_matrix()) return matrix_to_json(e.matrix());
  if (e.is_direct_sum()) {
    Json parts = Json::array();
    for (const Matrix& m : e.direct_sum().parts()) parts.push_back(matrix_to_json(m));
    return {{"kind", "sum"}, {"parts", parts}};
  }
  Json monomials = Json::array();
  for (const auto& [exps, m] : e.z23().terms()) {
    monomials.push_back({{"tExp16", exps.first}, {"sExp16", exps.second}, {"matrix", rows_to_json(m)}});
  }
  return {{"kind", "z23"}, {"monomials", monomials}};
}

RingElement element_from_json(const Json& j) {
  const std::string kind = kind_of(j);
  if (kind.empty() || kind == "matrix") return matrix_from_json(j);
  if (kind == "sum") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) malformed("parts must be an array");
    std::vector<Matrix> out;
    for (const Json& p : parts) out.push_back(matrix_from_json(p));
    return DirectSum(std::move(out));
  }
  if (kind == "z23") {
    const Json& monomials = field(j, "monomials");
    if (!monomials.is_array()) malformed("monomials must be an array");
    Z23Element out;
    for (const Json& m : monomials) {
      auto exponent = [&](const char* key16, const char* key8) -> int {
        const bool has16 = m.contains(key16);
        const bool has8 = m.contains(key8);
        if (has16 == has8) malformed(std::string("monomial needs exactly one of ") + key16 + ", " + key8);
        const Json& v = m.at(has16 ? key16 : key8);
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 4096) {
          malformed("exponents must be small non-negative integers");
        }
        const int e = static_cast<int>(v.get<long long>());
        return has16 ? e : 2 * e;
      };
      const int t = exponent("tExp16", "tExp8");
      const int s = exponent("sExp16", "sExp8");
      out = out + Z23Element::monomial(t, s, rows_from_json(Ring::rationals(), Z23Element::kDim,
                                                           field(m, "matrix")));
    }
    return out;
  }
  malformed("unknown element kind '" + kind + "'");
}

Json working_ring_to_json(const RingElement& e) {
  if (e.is_matrix()) return ring_to_json(e.matrix().ring());
  if (e.is_direct_sum()) {
    Json parts = Json::array();
    for (const Matrix& m : e.direct_sum().parts()) {
      parts.push_back({{"ring", ring_to_json(m.ring())}, {"n", m.size()}});
    }
    return {{"kind", "Sum"}, {"parts", parts}};
  }
  return {{"kind", "Z23"}};
}

Json witness_to_json(const CommutatorWitness& w) {
  return {{"p", element_to_json(w.p)}, {"q", element_to_json(w.q)}};
}

CommutatorWitness witness_from_json(const Json& j) {
  return CommutatorWitness::of(element_from_json(field(j, "p")), element_from_json(field(j, "q")));
}

Json certificate_to_json(const Certificate& c) {
  Json terms = Json::array();
  for (const auto& term : c.terms) {
    if (const auto* pair = std::get_if<PairProduct>(&term)) {
      terms.push_back({{"kind", "pair"}, {"l", witness_to_json(pair->left)}, {"r", witness_to_json(pair->right)}});
    } else {
      terms.push_back({{"kind", "single"}, {"w", witness_to_json(std::get<SingleCommutator>(term).w)}});
    }
  }
  return {{"ring", working_ring_to_json(c.target)},
          {"target", element_to_json(c.target)},
          {"terms", terms},
          {"provenance", c.provenance}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c{element_from_json(field(j, "target")), {}, ""};
  if (j.contains("ring") && working_ring_to_json(c.target) != field(j, "ring")) {
    malformed("certificate ring does not match its target");
  }
  if (j.contains("provenance")) c.provenance = string_field(j, "provenance");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  for (const Json& t : terms) {
    const std::string kind = string_field(t, "kind");
    if (kind == "pair") {
      c.terms.emplace_back(PairProduct{witness_from_json(field(t, "l")), witness_from_json(field(t, "r"))});
    } else if (kind == "single") {
      c.terms.emplace_back(SingleCommutator{witness_from_json(field(t, "w"))});
    } else {
      malformed("unknown term kind '" + kind + "'");
    }
  }
  return c;
}

Json unit_witness_to_json(const SingleUnitWitness& w) {
  return {{"s", element_to_json(w.s)},
          {"u", witness_to_json(w.u)},
          {"v", witness_to_json(w.v)},
          {"w", witness_to_json(w.w)}};
}

SingleUnitWitness unit_witness_from_json(const Json& j) {
  return {element_from_json(field(j, "s")), witness_from_json(field(j, "u")),
          witness_from_json(field(j, "v")), witness_from_json(field(j, "w"))};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::string WorkingRing::name() const {
  if (kind == Kind::kZ23) return "Z23";
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out += (i ? "+" : "") + ("M" + std::to_string(sizes[i]) + "(" + coefficients[i]->name() + ")");
  }
  return out;
}

RingRef parse_coefficient_ring(const std::string& spec) {
  static const std::regex residue(R"(([ZF])([0-9]+))");
  std::smatch m;
  try {
    if (spec == "Z") return Ring::integers();
    if (spec == "Q") return Ring::rationals();
    if (spec == "H" || spec == "Quat") return Ring::quaternions();
    if (std::regex_match(spec, m, residue) && m[2].length() <= 18) {
      mpz_class value(m[2].str());
      return m[1] == "Z" ? Ring::integers_mod(value) : Ring::prime_field(value);
    }
    if (spec.size() > 3 && spec.back() == ']' && spec[spec.size() - 3] == '[') {
      const std::string var = spec.substr(spec.size() - 2, 1);
      if (std::isalpha(static_cast<unsigned char>(var[0]))) {
        return Ring::polynomial(parse_coefficient_ring(spec.substr(0, spec.size() - 3)), var);
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) throw Error(ErrorCode::kUnknownRingSpec, e.what());
    throw;
  }
  throw Error(ErrorCode::kUnknownRingSpec, "unknown coefficient ring '" + spec + "'");
}

WorkingRing parse_working_ring(const std::string& raw) {
  std::string spec;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c);
  }
  WorkingRing out;
  if (spec == "Z23") {
    out.kind = WorkingRing::Kind::kZ23;
    return out;
  }
  if (spec == "H" || spec == "Quat") {
    out.coefficients = {Ring::quaternions()};
    out.sizes = {1};
    return out;
  }
  static const std::regex matrix(R"(M([0-9]{1,3})\((.+)\))");
  std::size_t start = 0;
  std::vector<std::string> parts;
  int depth = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i < spec.size() && (spec[i] == '(' || spec[i] == '[')) ++depth;
    if (i < spec.size() && (spec[i] == ')' || spec[i] == ']')) --depth;
    if (i == spec.size() || (spec[i] == '+' && depth == 0)) {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  for (const std::string& part : parts) {
    std::smatch m;
    if (!std::regex_match(part, m, matrix)) {
      throw Error(ErrorCode::kUnknownRingSpec, "unknown ring spec '" + raw + "'");
    }
    const std::size_t n = std::stoul(m[1].str());
    if (n == 0) throw Error(ErrorCode::kUnknownRingSpec, "matrix size must be positive");
    out.sizes.push_back(n);
    out.coefficients.push_back(parse_coefficient_ring(m[2].str()));
  }
  if (parts.size() > 1) out.kind = WorkingRing::Kind::kDirectSum;
  return out;
}

}  // namespace ccert
