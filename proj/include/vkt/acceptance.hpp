#pragma once

#include <string>
#include <vector>

namespace vkt {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

// Runs every acceptance criterion (1..9) in order. Deterministic; takes a few seconds.
std::vector<CriterionResult> run_acceptance();
// Only the listed criteria.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& numbers);

// One "PASS n title" / "FAIL n title" line per criterion, details indented below it.
std::string render_text(const std::vector<CriterionResult>& results);
std::string render_json(const std::vector<CriterionResult>& results);

}  // namespace vkt
