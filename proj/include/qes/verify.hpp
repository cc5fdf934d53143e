#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace qes {

struct VerifyOptions {
  std::vector<std::string> models;  // empty: every catalog entry
  int trials = 25;
  std::uint64_t seed = 1;
  int max_n = 8;
  int N_extra = 6;
  int potential_points = 50;
  int threads = 0;            // 0: QES_THREADS or hardware concurrency
  bool inject_fault = false;  // perturbs B by x after the constraint solve
};

struct PropertyTally {
  std::string name;
  int checks = 0;
  int failures = 0;
  int skipped = 0;
  std::string first_failure;
};

struct ModelSummary {
  std::string id;
  std::vector<PropertyTally> properties;
  std::vector<std::string> notes;  // reported, not asserted
  bool ok() const;
};

struct VerifyReport {
  std::vector<ModelSummary> models;
  int trials = 0;
  std::uint64_t seed = 0;
  double seconds = 0;
  bool ok() const;
};

VerifyReport run_verify(const VerifyOptions& opt);

int thread_count(int requested);

nlohmann::json verify_json(const VerifyReport& r, bool timings = true);
std::string verify_text(const VerifyReport& r);

}  // namespace qes
