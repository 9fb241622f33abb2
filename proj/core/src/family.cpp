#include "typedmatrices/family.hpp"

#include <algorithm>
#include <mutex>

#include "typedmatrices/errors.hpp"

namespace tmat {

std::string_view to_string(Capability c) noexcept {
  switch (c) {
    case Capability::closed_det: return "closed_det";
    case Capability::closed_inverse: return "closed_inverse";
    case Capability::closed_eigvals: return "closed_eigvals";
    case Capability::closed_predicates: return "closed_predicates";
  }
  return "?";
}

namespace {

void check_capability(const Family& f, Capability cap, bool has_fn) {
  if (f.has(cap) != has_fn) {
    throw ArgumentError("family '" + f.id() + "': capability " + std::string(to_string(cap)) +
                        (has_fn ? " has a routine but is not declared" : " declared without a routine"));
  }
}

ParamArgs normalize_args(const FamilyDescriptor& desc, const ParamArgs& args) {
  ParamArgs out;
  for (const auto& [name, value] : args.values()) {
    auto spec = std::find_if(desc.params.begin(), desc.params.end(),
                             [&](const ParamSpec& p) { return p.name == name; });
    if (spec == desc.params.end()) {
      std::string msg = "unknown parameter '" + name + "' for " + desc.id + "; expected:";
      for (const auto& p : desc.params) msg += " " + p.name;
      throw ArgumentError(msg);
    }
    switch (spec->type) {
      case ParamType::dimension:
      case ParamType::integer: out.set(name, *args.integer(name)); break;
      case ParamType::scalar: out.set(name, *args.scalar(name)); break;
      case ParamType::flag: out.set(name, *args.flag(name)); break;
      case ParamType::vector: out.set(name, *args.vector(name)); break;
    }
  }
  return out;
}

/// Rewrites scalar values into the requested kind so element formulas read
/// them without conversion.
ParamRecord convert_record(const Family& f, const ParamRecord& in, ScalarKind kind) {
  ParamRecord out;
  for (std::size_t k = 0; k < in.size(); ++k) {
    ParamValue v = in[k];
    try {
      if (auto* s = std::get_if<Scalar>(&v)) {
        *s = s->as(kind);
      } else if (auto* g = std::get_if<Generator>(&v); g && g->values()) {
        std::vector<Scalar> converted;
        converted.reserve(g->values()->size());
        for (const auto& x : *g->values()) converted.push_back(x.as(kind));
        *g = Generator(std::move(converted));
      }
    } catch (const ArgumentError& e) {
      throw ArgumentError(f.id() + ": parameter not representable as " +
                          std::string(to_string(kind)) + ": " + e.what());
    }
    out.push(std::move(v));
  }
  if (f.ops.check_kind) f.ops.check_kind(out, kind);
  return out;
}

}  // namespace

const Family& FamilyRegistry::add(Family family) {
  if (family.descriptor.id.empty()) throw ArgumentError("family id must not be empty");
  if (!family.ops.build || !family.ops.element) {
    throw ArgumentError("family '" + family.id() + "' needs build and element functions");
  }
  check_capability(family, Capability::closed_det, static_cast<bool>(family.ops.det));
  check_capability(family, Capability::closed_inverse, static_cast<bool>(family.ops.inverse));
  check_capability(family, Capability::closed_eigvals, static_cast<bool>(family.ops.eigvals));
  check_capability(family, Capability::closed_predicates, static_cast<bool>(family.ops.predicates));
  auto& tags = family.descriptor.tags;
  for (std::size_t k = 0; k < tags.size(); ++k) {
    if (static_cast<std::size_t>(tags[k]) >= kPropertyCount) {
      throw ArgumentError("family '" + family.id() + "' has an invalid property tag");
    }
    if (std::find(tags.begin(), tags.begin() + static_cast<std::ptrdiff_t>(k), tags[k]) !=
        tags.begin() + static_cast<std::ptrdiff_t>(k)) {
      throw ArgumentError("family '" + family.id() + "' repeats property " +
                          std::string(to_string(tags[k])));
    }
  }

  std::unique_lock lock(mutex_);
  for (const auto& f : families_) {
    if (f.id() == family.id()) throw LookupError("duplicate family id '" + family.id() + "'");
  }
  families_.push_back(std::move(family));
  return families_.back();
}

const Family* FamilyRegistry::find(std::string_view id) const {
  std::shared_lock lock(mutex_);
  for (const auto& f : families_) {
    if (f.id() == id) return &f;
  }
  return nullptr;
}

const Family& FamilyRegistry::get(std::string_view id) const {
  if (const Family* f = find(id)) return *f;
  throw LookupError("unknown family '" + std::string(id) + "'");
}

std::vector<std::string> FamilyRegistry::ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  out.reserve(families_.size());
  for (const auto& f : families_) out.push_back(f.id());
  return out;
}

std::vector<const Family*> FamilyRegistry::families() const {
  std::shared_lock lock(mutex_);
  std::vector<const Family*> out;
  out.reserve(families_.size());
  for (const auto& f : families_) out.push_back(&f);
  return out;
}

std::size_t FamilyRegistry::size() const {
  std::shared_lock lock(mutex_);
  return families_.size();
}

MatrixHandle FamilyRegistry::construct(std::string_view id, const ParamArgs& args,
                                       std::optional<ScalarKind> kind) const {
  return tmat::construct(get(id), args, kind);
}

FamilyRegistry& FamilyRegistry::global() {
  static FamilyRegistry* registry = [] {
    auto* r = new FamilyRegistry();
    register_builtin_families(*r);
    return r;
  }();
  return *registry;
}

MatrixHandle construct(const Family& family, const ParamArgs& args, std::optional<ScalarKind> kind) {
  ParamArgs normalized = normalize_args(family.descriptor, args);
  BuiltParams built = family.ops.build(normalized);
  ScalarKind k = kind.value_or(family.descriptor.default_kind);
  return MatrixHandle(family, built.rows, built.cols, k, convert_record(family, built.record, k));
}

MatrixHandle MatrixHandle::with_kind(ScalarKind kind) const {
  if (kind == kind_) return *this;
  return MatrixHandle(*family_, rows_, cols_, kind, convert_record(*family_, params_, kind));
}

MatrixHandle construct(std::string_view id, const ParamArgs& args, std::optional<ScalarKind> kind) {
  return FamilyRegistry::global().construct(id, args, kind);
}

std::vector<std::string> list_families() { return FamilyRegistry::global().ids(); }

void register_family(Family family) { FamilyRegistry::global().add(std::move(family)); }

}  // namespace tmat
