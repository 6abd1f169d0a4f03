#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/json_io.hpp"
#include "lieforge/spacetime.hpp"

namespace lieforge {

/// Shifts one entry of one named catalog set; used for negative controls.
struct Perturbation {
  std::string set;        ///< catalog name, e.g. "J22"
  std::size_t member = 1; ///< 1-based
  std::size_t row = 0;    ///< 0-based
  std::size_t col = 0;
  CScalar delta{1e-6, 0.0};

  /// "SET:member:row:col[:re[:im]]"; throws ParseError.
  static Perturbation parse(std::string_view text);
};

struct SuiteConfig {
  std::uint64_t seed = 20181004;
  std::uint32_t trials = 1000;
  double alpha = 1.0;
  Tolerance tol{};
  std::optional<Perturbation> perturb;

  void validate() const;
};

/// Named generator sets every suite draws from, so a single perturbation
/// reaches every check that consumes the set.
///
///   J2 K2 V2            2-rep (V2 with seeded random c, c4)
///   J22 K22 V22         (2+2)-rep, V22 built with the configured alpha
///   gamma               Dirac matrices (V22 at alpha = 1)
///   P+ P-               momentum branches with the gamma constants
///   J4 K4               closed-form spacetime generators
///   J5 K5 P5            append-one affine generators
///   SU3                 Gell-Mann generators lambda/2
class Catalog {
 public:
  explicit Catalog(const SuiteConfig& cfg);
  const GeneratorSet& at(const std::string& name) const;
  static const std::vector<std::string>& names();
  VectorParams vector_params() const { return params_; }

 private:
  VectorParams params_;
  std::map<std::string, GeneratorSet> sets_;
};

struct Artifact {
  std::string name;
  json data;
  std::string text;  ///< human-readable rendering
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  std::vector<Artifact> artifacts;

  bool all_passed() const;
  void append(SuiteResult other);
};

/// verify, transfer, invariants, sun, exercises, all.
const std::vector<std::string>& suite_names();
/// Throws ParamError for unknown suites or invalid configs. Errors raised by
/// individual checks are converted into failed reports.
SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg);

/// Compact text rendering, e.g. "[[0, -i], [i, 0]]".
std::string format_matrix(const CMatrix& m);

}  // namespace lieforge
