#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwtsp/instance_io.hpp"

namespace pwtsp {

enum class Suite { Lemmas, Bounds, Gabriel, Gadget, All };

// Throws std::invalid_argument on unknown names.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t threads = 1;
};

struct Counterexample {
  std::string property;
  std::size_t trial = 0;
  std::string detail;
  std::optional<InstanceFile> instance;  // replayable input, when there is one
};

struct PropertyOutcome {
  std::string suite;
  std::string name;
  std::size_t checks = 0;
  std::vector<Counterexample> failures;  // sorted by trial
};

struct VerifyReport {
  std::vector<PropertyOutcome> properties;
  bool passed() const;
};

// Runs every property of the suite for `trials` seeded trials each. Trials
// are spread over `threads` workers; the outcome does not depend on the
// thread count.
VerifyReport run_verify(Suite suite, const VerifyOptions& options);

}  // namespace pwtsp
