// Command-line front end; talks to the library only through ccert.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccert/ccert.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCheckFailed = 2;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

int print_error(const std::string& code, const std::string& message) {
  std::cout << "{\n  \"error\": {\n    \"code\": \"" << code << "\",\n    \"message\": \""
            << json_escape(message) << "\"\n  }\n}\n";
  return kExitError;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

/// Prints the result (to `output_path` when given) and maps its status to an exit code.
int finish(ccert_status status, ccert_result* result, const std::string& output_path) {
  int code = kExitOk;
  if (status == CCERT_OK || status == CCERT_CHECK_FAILED) {
    const std::string json = ccert_result_json(result);
    if (output_path.empty()) {
      std::cout << json;
    } else {
      std::ofstream out(output_path);
      out << json;
      if (!out) code = print_error("MalformedInput", "cannot write " + output_path);
    }
    if (code == kExitOk && status == CCERT_CHECK_FAILED) code = kExitCheckFailed;
  } else {
    code = print_error(ccert_status_name(status), ccert_result_message(result));
  }
  ccert_result_free(result);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commutator-product certificates"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the JSON result to a file");

  std::string ring, element_path, certificate_path, witness = "auto", method = "xi3";
  unsigned random_count = 0, n = 0, xi_cap = 8, example22 = 0, grid = 101;
  std::uint64_t seed = 0;
  bool check = false;

  auto* decompose = app.add_subcommand("decompose", "Decompose an element into pair products");
  decompose->add_option("--ring", ring, "Working ring, e.g. M3(Z), M2(Z)+M3(Z), H, Z23")->required();
  auto* matrix_opt = decompose->add_option("--matrix,--element", element_path, "Element JSON file");
  auto* random_opt = decompose->add_option("--random", random_count, "Decompose this many random elements");
  matrix_opt->excludes(random_opt);
  decompose->add_option("--seed", seed, "Seed for --random");
  decompose->add_flag("--check", check, "Verify before emitting");

  auto* verify = app.add_subcommand("verify", "Verify a certificate");
  verify->add_option("--certificate", certificate_path, "Certificate JSON file")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Print the unit witness triple for M_n(Z)");
  witness_cmd->add_option("--n", n, "Matrix size (>= 2)")->required();

  auto* xi3 = app.add_subcommand("xi3", "Three-term decomposition from a unit witness");
  xi3->add_option("--ring", ring, "Working ring")->required();
  xi3->add_option("--element", element_path, "Element JSON file")->required();
  xi3->add_option("--witness", witness, "'auto' or a unit witness JSON file");
  xi3->add_option("--method", method, "xi3, mixed or pipeline")
      ->check(CLI::IsMember({"xi3", "mixed", "pipeline"}));

  auto* bound = app.add_subcommand("bound", "Upper bounds on xi for a described ring");
  bound->add_option("--ring", ring, "Structure, e.g. M3(S), H, Z23, contains(xi=2)")->required();

  auto* brute = app.add_subcommand("brute", "Exhaustive finite-ring report");
  auto* brute_ring = brute->add_option("--ring", ring, "M<n>(Z<m>), U<n>(F<q>), ..., or tables:<file>");
  brute->add_option("--xi-cap", xi_cap, "Largest N tried for xi");
  auto* example_opt = brute->add_option("--example22", example22, "Lie ideal check over F2 or F4");
  brute_ring->excludes(example_opt);

  auto* z23 = app.add_subcommand("z23", "Dimension-drop algebra checks");
  z23->require_subcommand(1);
  auto* verify_unit = z23->add_subcommand("verify-unit", "Check the two-summand unit identity");
  verify_unit->add_option("--grid", grid, "Numeric grid points");
  auto* xi6 = z23->add_subcommand("xi6", "Six-term decomposition of an admissible element");
  xi6->add_option("--element", element_path, "Element JSON file")->required();

  auto* identities = app.add_subcommand("identities", "Run the free-algebra identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return print_error("InvalidArgument", e.what());
  }

  auto load = [&](const std::string& path, std::string& text) {
    if (read_file(path, text)) return true;
    print_error("MalformedInput", "cannot read " + path);
    return false;
  };

  ccert_result* result = nullptr;
  ccert_status status = CCERT_OK;
  std::string text;
  if (decompose->parsed()) {
    if (random_opt->count() > 0) {
      status = ccert_decompose_random(ring.c_str(), random_count, seed, check, &result);
    } else {
      if (element_path.empty()) return print_error("InvalidArgument", "--matrix or --random is required");
      if (!load(element_path, text)) return kExitError;
      status = ccert_decompose(ring.c_str(), text.c_str(), check, &result);
    }
  } else if (verify->parsed()) {
    if (!load(certificate_path, text)) return kExitError;
    status = ccert_verify(text.c_str(), &result);
  } else if (witness_cmd->parsed()) {
    status = ccert_witness(n, &result);
  } else if (xi3->parsed()) {
    if (!load(element_path, text)) return kExitError;
    std::string witness_text;
    if (witness != "auto" && !load(witness, witness_text)) return kExitError;
    status = ccert_xi3(ring.c_str(), text.c_str(), witness == "auto" ? nullptr : witness_text.c_str(),
                       method.c_str(), &result);
  } else if (bound->parsed()) {
    status = ccert_bound(ring.c_str(), &result);
  } else if (brute->parsed()) {
    if (example_opt->count() > 0) {
      status = ccert_example22(example22, &result);
    } else {
      if (ring.empty()) return print_error("InvalidArgument", "--ring or --example22 is required");
      status = ccert_brute(ring.c_str(), xi_cap, &result);
    }
  } else if (verify_unit->parsed()) {
    status = ccert_z23_verify_unit(grid, &result);
  } else if (xi6->parsed()) {
    if (!load(element_path, text)) return kExitError;
    status = ccert_z23_xi6(text.c_str(), &result);
  } else if (identities->parsed()) {
    status = ccert_identities(&result);
  }
  return finish(status, result, output);
}
