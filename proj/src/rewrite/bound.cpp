#include <cctype>
#include <regex>

#include "ccert/error.hpp"
#include "ccert/rewrite.hpp"

namespace ccert {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

/// Splits on '+' at parenthesis depth 0.
std::vector<std::string> split_sum(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

/// Size n of "M<n>(S)", or 0 when the text is not of that form.
unsigned long matrix_size(const std::string& s) {
  static const std::regex pattern(R"(M([0-9]+)\((.+)\))");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) return 0;
  return std::stoul(m[1].str());
}

bool is_quaternions(const std::string& s) { return s == "H" || s == "Quat" || s == "H(Q)"; }

/// True when every summand is M<n>(S) with n >= 2.
bool is_matrix_sum(const std::string& s) {
  for (const auto& part : split_sum(s)) {
    if (matrix_size(part) < 2) return false;
  }
  return true;
}

BoundRule cubic_rule(unsigned long long xi_subring) {
  return {15 * xi_subring * xi_subring * xi_subring, "unital-subring-cubic", false, ""};
}

}  // namespace

std::vector<BoundRule> xi_upper_bound(const std::string& raw) {
  const std::string s = strip(raw);
  std::vector<BoundRule> rules;
  static const std::regex contains_pattern(R"(contains\((.+)\))");
  static const std::regex xi_pattern(R"(xi=([0-9]+))");
  std::smatch m;

  if (std::regex_match(s, m, contains_pattern)) {
    const std::string inner = m[1].str();
    std::smatch xm;
    if (std::regex_match(inner, xm, xi_pattern)) {
      unsigned long long n = std::stoull(xm[1].str());
      if (n == 0 || n > 100000) throw Error(ErrorCode::kUnknownStructure, "xi of subring out of range");
      rules.push_back(cubic_rule(n));
    } else if (inner == "Z23") {
      rules.push_back({6, "contains-dimension-drop", true, "z23.xi6 (two-summand unit witness)"});
    } else if (is_matrix_sum(inner)) {
      rules.push_back({3, "contains-matrix-sum", true, "rewrite.xi3 with witness.subring_witness"});
      rules.push_back(cubic_rule(2));
    } else if (is_quaternions(inner)) {
      rules.push_back(cubic_rule(2));
    }
  } else if (is_quaternions(s)) {
    rules.push_back({2, "division-ring", true, "mdecomp.quaternion"});
  } else if (s == "Z23") {
    rules.push_back({6, "dimension-drop", true, "z23.xi6"});
  } else if (is_matrix_sum(s)) {
    if (split_sum(s).size() == 1) {
      rules.push_back({2, "matrix-ring", true, "mdecomp.nxn"});
    } else {
      rules.push_back({2, "matrix-sum-coordinatewise", true, "mdecomp.nxn per summand"});
    }
    rules.push_back({3, "contains-matrix-sum", true, "rewrite.xi3 with witness.subring_witness"});
  }
  if (rules.empty()) {
    throw Error(ErrorCode::kUnknownStructure, "no bound rule applies to '" + raw + "'");
  }
  return rules;
}

}  // namespace ccert
