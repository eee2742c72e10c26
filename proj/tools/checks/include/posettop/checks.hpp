#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "posettop/complex.hpp"

namespace posettop::checks {

struct CaseResult {
  std::string name;
  int size = 0;
  bool skipped = false;
  bool ok = false;
  std::string detail;
  std::string repro;
  double seconds = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t ran() const;
  std::size_t failed() const;
  // No failures and at least one case ran.
  bool passed() const { return failed() == 0 && ran() > 0; }
  bool skipped() const { return ran() == 0; }
};

struct Options {
  int max_size = std::numeric_limits<int>::max();
  unsigned jobs = 1;
  std::string filter;  // substring of case names; empty runs all
};

inline constexpr int kCriterionCount = 15;

const std::vector<std::string>& suite_names();
// Throws Error on an unknown suite.
std::vector<int> suite_criteria(const std::string& suite);
std::string criterion_title(int id);
std::string criterion_suite(int id);

CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_suite(const std::string& suite, const Options& options);

std::string scoreboard_json(const std::string& suite, const Options& options,
                            const std::vector<CriterionResult>& results);

// Small named complexes used by the identity sweeps.
std::vector<std::pair<std::string, SimplicialComplex>> complex_corpus();

}  // namespace posettop::checks
