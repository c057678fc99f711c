#pragma once

#include <string>
#include <vector>

#include "outfk/poincare.hpp"

namespace outfk {

struct SelftestCheck {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few, for the report
};

struct SelftestReport {
  int max_p = 0;
  std::vector<SelftestCheck> checks;
  bool ok() const;
};

/// Invariant sweeps over all primes up to max_p, the known table cells, the
/// example families and a batch of random equivariant graphs.
SelftestReport run_selftest(int max_p, const Registry& registry = default_registry());

}  // namespace outfk
