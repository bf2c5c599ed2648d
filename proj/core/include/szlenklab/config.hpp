#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace szlenklab {

enum class OutputFormat { json, csv };

// Shared run configuration for the verify suites and the CLI. A single
// root seed feeds every sampler through counter-derived streams, so runs
// are byte-reproducible regardless of thread count.
struct RunConfig {
  std::uint64_t seed = 20240901ULL;
  double tolerance = 1e-12;
  int oracle_cap = 9;
  bool exact_mode = false;
  int samples = 500;
  std::string output_path;
  OutputFormat output_format = OutputFormat::json;
  // Test-harness hook: check id whose measured values get perturbed to
  // force a failure path. Empty in normal operation.
  std::string fault_inject;

  void validate() const {
    if (!(tolerance > 0.0)) throw std::domain_error("config: tolerance must be > 0");
    if (oracle_cap < 4) throw std::domain_error("config: oracle cap must be >= 4");
    if (samples < 1) throw std::domain_error("config: samples must be >= 1");
  }
};

}  // namespace szlenklab
