#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topohopf/suites.hpp"

namespace topohopf {

/// A worked example: `op` applied to `args` must print `expected` once both
/// sides are brought to the canonical math rendering.
struct Golden {
  Suite suite;
  std::string name;
  std::string op;
  std::vector<std::string> args;
  std::string expected;
};

const std::vector<Golden>& goldens();

/// Replays one golden; a mismatch or an exception becomes a counterexample.
std::optional<Counterexample> replay(const Golden& g);

}  // namespace topohopf
