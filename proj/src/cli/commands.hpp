#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/io.hpp"
#include "hrnum/fock.hpp"

namespace hrnum::cli {

enum ExitCode : int {
  kOk = 0,
  kNotIsomorphic = 1,
  kParse = 2,
  kHypothesis = 3,
  kSupport = 4,
  kData = 5,
};

/// Output of one command: the JSON report and its human-readable rendering.
struct Report {
  Json doc;  // command, inputs, results, diagnostics, exit_code
  std::string text;
  int exit_code = kOk;
};

inline constexpr Coord kDefaultVerifyBox = 12;

struct VerifyOptions {
  std::string spec;
  Coord box = kDefaultVerifyBox;  // per dimension
};

struct IsoOptions {
  std::string spec_a;
  std::string spec_b;
};

struct NormOptions {
  std::string spec;
  std::string poly;
  std::vector<Coord> boxes{8, 16, 32, 64};  // per dimension
  double tol = kDefaultNormTolerance;
  long grid = 0;  // 0 selects the default for the rank
};

struct CharOptions {
  std::string mode;  // recover | extend | counterexample
  std::string spec;
  std::string sample;             // recover, extend
  std::string at;                 // extend: comma-separated t
  Coord bound = 20;               // extend: largest n tried
  std::optional<std::size_t> axis;  // counterexample, 1-based
};

Report run_verify(const VerifyOptions& opt);
Report run_iso(const IsoOptions& opt);
Report run_norm(const NormOptions& opt);
Report run_char(const CharOptions& opt);

// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

}  // namespace hrnum::cli
