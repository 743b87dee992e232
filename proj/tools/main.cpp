#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "spinlift/error.hpp"

namespace {

using spinlift::cli::Json;

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct Flags {
  std::optional<std::string> metric;
  std::optional<std::string> rep;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<double> scale;
  std::optional<int> cases;
  std::string in;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw spinlift::cli::InputError("cannot open input file: " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit(const Json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    spinlift::cli::write(std::cout, doc);
    return;
  }
  std::ofstream file(path);
  if (!file) throw spinlift::cli::InputError("cannot open output file: " + path);
  spinlift::cli::write(file, doc);
}

spinlift::cli::RequestOverrides to_overrides(const Flags& f) {
  spinlift::cli::RequestOverrides o;
  if (f.metric) {
    const auto s = spinlift::parse_signature(*f.metric);
    if (!s || *s == spinlift::Signature::kGeneral) {
      throw spinlift::cli::InputError("unknown metric: " + *f.metric);
    }
    o.metric = *s;
  }
  if (f.rep) {
    if (*f.rep == "gamma") {
      o.rep = spinlift::RepKind::kGamma;
    } else if (*f.rep == "regular") {
      o.rep = spinlift::RepKind::kRegular;
    } else {
      throw spinlift::cli::InputError("unknown rep: " + *f.rep);
    }
  }
  o.tol = f.tol;
  o.seed = f.seed;
  o.scale = f.scale;
  o.cases = f.cases;
  return o;
}

int execute(spinlift::cli::Command command, const Flags& flags) {
  const std::string& out = flags.out;
  try {
    const auto overrides = to_overrides(flags);
    Json doc;
    // selftest runs from flags alone; stdin is only read when --in is given.
    if (command != spinlift::cli::Command::kSelftest || !flags.in.empty()) {
      const std::string text = read_input(flags.in);
      if (!text.empty() || command != spinlift::cli::Command::kSelftest) {
        doc = Json::parse(text);
      }
    }
    const auto request = spinlift::cli::parse_request(command, doc, overrides);
    const Json result = spinlift::cli::run(request);
    emit(result, out);
    if (command == spinlift::cli::Command::kSelftest && !result.value("passed", false)) return kExitDomain;
    return 0;
  } catch (const spinlift::Error& e) {
    emit(spinlift::cli::error_document(spinlift::to_string(e.code()), e.what()), out);
    return kExitDomain;
  } catch (const Json::parse_error& e) {
    emit(spinlift::cli::error_document("MalformedJson", e.what()), out);
    return kExitInput;
  } catch (const spinlift::cli::InputError& e) {
    emit(spinlift::cli::error_document("InvalidInput", e.what()), out);
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz bivector decomposition, spin exponentials and spin lifts"};
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--metric", flags.metric, "pmmm or mppp")->check(CLI::IsMember({"pmmm", "mppp", "+---", "-+++"}));
  app.add_option("--rep", flags.rep, "gamma or regular")->check(CLI::IsMember({"gamma", "regular"}));
  app.add_option("--tol", flags.tol, "reported defect tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", flags.seed, "selftest seed");
  app.add_option("--scale", flags.scale, "selftest sample scale")->check(CLI::NonNegativeNumber);
  app.add_option("--cases", flags.cases, "selftest cases per check")->check(CLI::PositiveNumber);
  app.add_option("--in", flags.in, "input JSON path (default stdin)");
  app.add_option("--out", flags.out, "output JSON path (default stdout)");

  const struct {
    spinlift::cli::Command command;
    const char* help;
  } commands[] = {
      {spinlift::cli::Command::kDecompose, "orthogonal decomposition of a bivector"},
      {spinlift::cli::Command::kExpSpin, "closed-form exp of the spin representation"},
      {spinlift::cli::Command::kLog, "logarithm of a Lorentz transformation"},
      {spinlift::cli::Command::kFactor, "commuting simple factorization"},
      {spinlift::cli::Command::kLift, "spin lift of a Lorentz transformation"},
      {spinlift::cli::Command::kInvariants, "tr2 and det recovered from the spin representation"},
      {spinlift::cli::Command::kSelftest, "seeded oracle suite"},
  };
  std::optional<spinlift::cli::Command> chosen;
  // Flags are accepted before or after the subcommand.
  app.fallthrough();
  for (const auto& c : commands) {
    app.add_subcommand(std::string(spinlift::cli::to_string(c.command)), c.help)->callback([&chosen, c] {
      chosen = c.command;
    });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // --help and --version arrive here too, with exit code 0.
    return app.exit(e) == 0 ? 0 : kExitInput;
  }
  return execute(*chosen, flags);
}
