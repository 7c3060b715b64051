#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "invlab/geodesic.hpp"

namespace invlab {

// Named tolerances with fixed defaults; overrides must use registered names.
class Tolerances {
 public:
  Tolerances() = default;
  explicit Tolerances(const std::map<std::string, double>& overrides);

  static const std::map<std::string, double>& defaults();
  double operator[](const std::string& name) const;

 private:
  std::map<std::string, double> overrides_;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  Tolerances tolerances;
  SolverConfig solver;
};

struct Measurement {
  std::string name;
  double value;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<Measurement> measured;  // in a fixed order
  double tolerance = 0.0;             // the suite's headline tolerance
};

// Suite names in execution order.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options);

// `selector` is a suite name or "all".
std::vector<SuiteResult> run_suites(std::string_view selector,
                                    const VerifyOptions& options);

}  // namespace invlab
