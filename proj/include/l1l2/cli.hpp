#pragma once

// Command-line front end: input documents, JSON reports, exit-code contract.
//
// Exit codes: 0 success, 1 parse error, 2 domain error, 3 capability refusal.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "l1l2/field.hpp"
#include "l1l2/function_space.hpp"

namespace l1l2::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kParseError = 1, kDomainError = 2, kRefused = 3 };

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputKind { Vector, Subspace, StepFunction };

struct InputDocument {
  InputKind kind = InputKind::Vector;
  Field field = Field::Real;
  std::vector<Vector> vectors;        // one for Vector, the spanning set for Subspace
  std::optional<StepFunction> step;   // for StepFunction
  std::string digest;                 // "sha256:<hex>" of the raw bytes
};

/// JSON when the first non-blank character is '{', otherwise CSV (one row per
/// real vector). Throws ParseError on malformed input and l1l2::Error when a
/// well-formed document violates a domain invariant.
InputDocument parse_input(std::string_view text);

struct Options {
  std::optional<double> s;
  std::string mode = "exact";
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::size_t samples = 200;
  bool normalize = false;
};

Json analyze_vector(const InputDocument& in, const Options& opt);
Json analyze_subspace(const InputDocument& in, const Options& opt);
Json detect_coordinate(const InputDocument& in, const Options& opt);
Json peakiness_report(const InputDocument& in, const Options& opt);

/// Two-space indented JSON with every floating-point number printed to 17
/// significant digits, followed by a newline.
std::string render(const Json& report);

std::string sha256_hex(std::string_view bytes);

/// Re-checks the invariants of a parsed report; throws std::runtime_error
/// naming the first one that fails.
void validate_report(const nlohmann::json& report);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace l1l2::cli
