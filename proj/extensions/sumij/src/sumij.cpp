#include "sumij/sumij.hpp"

#include <typedmatrices/errors.hpp>

namespace sumij {

using namespace tmat;

Family make_family() {
  Family f;
  f.descriptor = {
      .id = "sumij",
      .display_name = "Sumij",
      .params = {{"m", ParamType::dimension, "n", ">= 0"}, {"n", ParamType::dimension, "m", ">= 0"}},
      .default_kind = ScalarKind::rational64,
      // rankdef: every row is (i + 1, ..., i + n) = i*ones + (1, ..., n), so
      // the rank is at most 2.
      .tags = {PropertyTag::symmetric, PropertyTag::integer, PropertyTag::positive, PropertyTag::rankdef},
      .capabilities = {Capability::closed_predicates},
      .summary = "a(i,j) = i + j",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto dim = [&](const char* name) -> std::optional<std::size_t> {
      auto v = args.integer(name);
      if (!v) return std::nullopt;
      if (*v < 0) throw ArgumentError(std::to_string(*v) + " < 0");
      return static_cast<std::size_t>(*v);
    };
    auto m = dim("m");
    auto n = dim("n");
    if (!m && !n) throw ArgumentError("sumij: missing required parameter 'n'");
    return BuiltParams{m.value_or(*n), n.value_or(*m), {}};
  };
  f.ops.element = typed_element([](const MatrixHandle&, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return T(static_cast<std::int64_t>(i + j));
  });
  f.ops.predicates = [](const MatrixHandle& h, Predicate p) -> std::optional<bool> {
    switch (p) {
      case Predicate::symmetric: return h.rows() == h.cols();
      case Predicate::diagonal: return h.rows() <= 1 && h.cols() <= 1;
      case Predicate::posdef:
        // Rank 2 with a positive diagonal: never positive definite beyond
        // 1x1. The 1x1 case [2] is left to the generic check.
        if (!h.square()) return false;
        if (h.rows() >= 2) return false;
        return std::nullopt;
    }
    return std::nullopt;
  };
  return f;
}

const Family& install(FamilyRegistry& families, GroupRegistry& groups) {
  const Family& f = families.add(make_family());
  groups.add_to_groups(f.id(), {std::string(kUserGroup)});
  return f;
}

const Family& install() { return install(FamilyRegistry::global(), GroupRegistry::global()); }

}  // namespace sumij
