#pragma once

#include <string>
#include <vector>

#include "balance/poset.hpp"

namespace balance {

// One expected-vs-computed comparison inside a reproduction target.
struct ReproCheck {
  std::string label;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproResult {
  std::string target;
  std::vector<ReproCheck> checks;
  bool pass = true;
};

// Names of the bundled reference posets (cover lists transcribed once, in a
// single table): "fig1", "T", "fig4-P", "fig4-Q", "fig5", "fig6-base",
// "fig8-left", "fig8-right", "fig11-A", "fig11-B", "fig11-C".
std::vector<std::string> reference_poset_names();
const Poset& reference_poset(const std::string& name);

// Soundness sweep of the almost-twin decision procedure over the full
// diagram corpus (all_shapes): every non-chain diagram must yield a pair
// that passes the structural almost-twin check, and the diagram's balance
// constant must be at least 1/3 by exact enumeration.
struct ShapeSweepResult {
  long long shapes = 0;       // corpus size
  long long chains = 0;       // chain diagrams (excluded from the claim)
  long long checked = 0;      // non-chain diagrams analysed
  long long fallbacks = 0;    // diagrams no structural rule recognised
  long long failures = 0;     // verification or bound failures
  std::string first_failure;  // description of the first failing diagram
};
ShapeSweepResult shape_sweep(int max_cells);

// Available reproduction targets, in canonical order.
std::vector<std::string> repro_targets();

// Runs one reproduction target; throws std::invalid_argument for an unknown
// name.
ReproResult run_repro(const std::string& target);

}  // namespace balance
