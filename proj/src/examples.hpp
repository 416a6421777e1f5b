#pragma once

// Bundled worked examples with known expected values: two S8
// computations (a Kashiwara-Saito singularity and one of Braden's
// examples), Braden's D4 torsion example, an S12 computation, and the
// symbolic dihedral intersection form. Each run recomputes the result
// and diffs it against the stored value.

#include <string>
#include <vector>

#include "sysjson.hpp"

namespace nh {

std::vector<std::string> example_names();

struct ExampleResult {
  bool pass = true;
  Json report;
};

ExampleResult run_example(const std::string& name);

}  // namespace nh
