#include "typedmatrices/harness.hpp"

#include <algorithm>
#include <iostream>

namespace tmat {

std::optional<ParamArgs> feasible_size(const Family& family, std::size_t requested) {
  if (requested < 1) return std::nullopt;
  if (family.ops.size_args) return family.ops.size_args(requested);
  return ParamArgs{{"n", static_cast<std::int64_t>(requested)}};
}

std::optional<ParamArgs> feasible_size(std::string_view family, std::size_t requested) {
  return feasible_size(FamilyRegistry::global().get(family), requested);
}

std::vector<const Family*> harness_families(const HarnessOptions& options) {
  const GroupRegistry& registry = options.registry ? *options.registry : GroupRegistry::global();
  std::vector<const Family*> out;
  for (const auto& id : registry.list_matrices(options.groups, options.props)) {
    if (std::find(options.exclude.begin(), options.exclude.end(), id) != options.exclude.end()) continue;
    out.push_back(&registry.families().get(id));
  }
  return out;
}

namespace detail {

void emit_warning(const HarnessOptions& options, const std::string& message) {
  if (options.warning_sink) {
    options.warning_sink(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace detail

}  // namespace tmat
