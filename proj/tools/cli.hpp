#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spinlift/clifford.hpp"
#include "spinlift/metric.hpp"

namespace spinlift::cli {

using Json = nlohmann::ordered_json;

enum class Command { kDecompose, kExpSpin, kLog, kFactor, kLift, kInvariants, kSelftest };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Malformed input: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobRequest {
  Command command = Command::kLift;
  Signature metric = Signature::kPlusMinus;
  RepKind rep = RepKind::kGamma;
  Mat4 matrix = Mat4::Identity();
  double tol = 1e-9;
  std::uint64_t seed = 1;
  double scale = 1.0;
  int cases = 200;
};

/// Overrides coming from command-line flags; unset fields fall back to the
/// request document, then to JobRequest defaults.
struct RequestOverrides {
  std::optional<Signature> metric;
  std::optional<RepKind> rep;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<double> scale;
  std::optional<int> cases;
};

/// Builds a request from a JSON document ({"matrix": [[...] x4], "metric",
/// "rep", "tol", "seed", "scale", "cases"}). The matrix is required for
/// every command but selftest. Throws InputError.
JobRequest parse_request(Command command, const Json& doc, const RequestOverrides& overrides);

/// Executes a request. Domain failures propagate as spinlift::Error.
Json run(const JobRequest& request);

/// {"error": {"code": ..., "message": ...}}
Json error_document(std::string_view code, std::string_view message);

/// Pretty-prints with two-space indentation; every floating-point value is
/// written with 17 significant digits.
std::string dump(const Json& doc);
void write(std::ostream& out, const Json& doc);

/// Runs the seeded oracle suite. Sets "passed" at the top level.
Json run_selftest(const JobRequest& request);

}  // namespace spinlift::cli
