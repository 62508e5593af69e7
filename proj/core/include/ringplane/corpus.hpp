#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringplane/ring.hpp"

namespace ringplane {

// Deterministic list of ring specs with orders up to max_order: every Z/n,
// the four canonical order-4 rings, and one entry per construction-family
// parameter choice of every larger admissible order. Sorted by (order,
// family, parameters).
std::vector<std::string> suite_corpus(std::size_t max_order);

struct SuiteCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // failure witness, or the subject count on success
};

struct SuiteOptions {
  std::size_t max_order = 16;
  std::size_t triple_budget = std::size_t{1} << 24;
  unsigned workers = 1;
  // test hook: bump one multiplication cell of the corpus ring at this index
  std::optional<std::size_t> corrupt_index;
};

struct SuiteResult {
  std::vector<SuiteCheck> checks;
  bool all_pass() const {
    for (const SuiteCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the whole invariant battery over the corpus: ring axioms, algebraic
// invariants, classification theorems, and the plane checks for every entry.
SuiteResult run_suite(const SuiteOptions& opts = {});

}  // namespace ringplane
