#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace topohopf {

/// What an operation returns, which decides how its math-notation text is
/// parsed back.
enum class ValueKind {
  Topologies,
  Words,
  Permutations,
  Ribbons,
  TopologyTensor,
  WordTensor,
  RibbonTensor,
  WordSet,
  Scalar,
};

struct OpResult {
  ValueKind kind = ValueKind::Scalar;
  std::string text;   ///< "coeff * label" rendering
  std::string math;  ///< math notation, as in the golden fixtures
  nlohmann::ordered_json json;
};

struct OpInfo {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
};

/// Every operation reachable by name, sorted by name.
const std::vector<OpInfo>& operations();

/// Evaluates an operation on arguments in the text formats. Throws
/// Error(UnknownOperation) for unknown names, Error(Parse) for a wrong
/// argument count or malformed argument, and the operation's own errors.
OpResult run_op(std::string_view name, const std::vector<std::string>& args);

/// Parses math-notation text of the given kind and renders it the way
/// run_op does, so transcriptions compare byte for byte.
std::string canonical_math(ValueKind kind, std::string_view text);

}  // namespace topohopf
