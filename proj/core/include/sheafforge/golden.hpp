#pragma once

#include <string>
#include <vector>

#include "sheafforge/modification.hpp"
#include "sheafforge/module.hpp"
#include "sheafforge/report.hpp"

namespace sheafforge {

struct GoldenOptions {
  /// Id prefixes to run, e.g. "rem-4.2"; empty runs everything.
  std::vector<std::string> only;
  /// Test hook: saturations in the primary-component check stop one
  /// quotient early.
  bool inject_saturation_fault = false;
  int degree_bound = 6;
  bool parallel = true;
};

/// Runs every anchored check and returns the records ordered by anchor,
/// then id.
Report verify_paper(const GoldenOptions& options = {});
std::vector<std::string> golden_check_ids();

// Shared examples.
/// Q[x, y] / (x^3 - y^2).
RingPtr cusp_ring();
/// (x, y) -> (t^2, t^3) into Q[t], with module basis 1, t.
Modification cusp_normalization();
/// The normalization as a module over the cusp: generators 1, w with
/// relations x w - y and y w - x^2.
Presentation cusp_normalization_module();

}  // namespace sheafforge
