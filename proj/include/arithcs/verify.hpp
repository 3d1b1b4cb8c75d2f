#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithcs/cohomology.hpp"

namespace arithcs {

struct CorpusGroup {
  std::string name;
  GroupPtr group;
};

/// Z/2, Z/3, Z/4, Z/2 x Z/2, Z/6, S3, D4, Q8.
std::vector<CorpusGroup> corpus_groups();

/// A scalar action through a nontrivial character: g acts by -1 on Z/3 when
/// G has a character of order 2, otherwise by a power of 2 on Z/7.
ModulePtr scalar_module(const GroupPtr& g);
/// Z/4 + Z/4 with the two summands swapped by a character of order 2, or
/// nullptr when G has none.
ModulePtr swap_module(const GroupPtr& g);
/// Trivial Z/2, trivial Z/3, scalar_module and (when defined) swap_module.
std::vector<ModulePtr> corpus_modules(const GroupPtr& g);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure
  bool passed() const { return failures == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 10;  // random draws per (module, degree)
};

/// Exact property checks over the corpus and the shipped toy data.
std::vector<PropertyResult> run_property_suite(const SuiteOptions& options = {});

}  // namespace arithcs
