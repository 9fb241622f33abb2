#pragma once

// Named, persistable sets of matrix families, and search over groups and
// property tags.

#include <filesystem>
#include <iosfwd>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "typedmatrices/family.hpp"
#include "typedmatrices/property.hpp"

namespace tmat {

inline constexpr std::string_view kBuiltinGroup = "builtin";
inline constexpr std::string_view kUserGroup = "user";
inline constexpr std::string_view kGroupFileHeader = "typedmatrices-group v1";

/// Group membership over a family registry.
///
/// `builtin` always holds exactly the builtin catalog and cannot be modified.
/// `user` always exists and may be empty. Every other group is non-empty:
/// removing its last member deletes it. Groups list as user, builtin, then
/// the remaining groups in creation order; members keep insertion order.
///
/// Reads may run concurrently; mutations are serialized, and a failed
/// mutation leaves the registry unchanged.
class GroupRegistry {
 public:
  explicit GroupRegistry(const FamilyRegistry& families = FamilyRegistry::global());
  GroupRegistry(const GroupRegistry&) = delete;
  GroupRegistry& operator=(const GroupRegistry&) = delete;

  const FamilyRegistry& families() const noexcept { return *families_; }

  std::vector<std::string> list_groups() const;
  bool has_group(std::string_view group) const;
  /// Members in insertion order. Throws LookupError for an unknown group.
  std::vector<std::string> members(std::string_view group) const;

  /// Adds a registered family to each group, creating missing groups.
  /// Throws LookupError for an unknown family, ArgumentError for builtin.
  void add_to_groups(std::string_view family, const std::vector<std::string>& groups);

  /// Throws LookupError for an unknown group or a non-member.
  void remove_from_group(std::string_view family, std::string_view group);

  /// Removes the family from every group except builtin.
  void remove_from_all_groups(std::string_view family);

  /// Writes the group file format: the header line, then one id per line.
  void write_group(std::string_view group, std::ostream& out) const;
  void save_group(std::string_view group, const std::filesystem::path& path) const;

  /// Reads a group file and adds its members to `group` (created if
  /// missing). All-or-nothing: any malformed line or unregistered id throws
  /// (ParseError / LookupError naming every offending id) before changes.
  void read_group(std::string_view group, std::istream& in);
  void load_group(std::string_view group, const std::filesystem::path& path);

  /// Families in every named group (intersection) carrying every named tag,
  /// in registration order. No groups means all registered families.
  std::vector<std::string> list_matrices(const std::vector<std::string>& groups = {},
                                         const std::vector<PropertyTag>& props = {}) const;

  /// Process-wide registry over FamilyRegistry::global().
  static GroupRegistry& global();

 private:
  using Group = std::pair<std::string, std::vector<std::string>>;

  Group* find_locked(std::string_view name);
  const Group* find_locked(std::string_view name) const;
  void add_locked(std::string_view family, std::string_view group);

  const FamilyRegistry* families_;
  mutable std::shared_mutex mutex_;
  std::vector<Group> groups_;  // user, builtin, then creation order
};

/// Declared tags of a family, in declaration order.
std::vector<PropertyTag> properties_of(const FamilyRegistry& registry, std::string_view family);
std::vector<PropertyTag> properties_of(std::string_view family);
std::vector<PropertyTag> properties_of(const MatrixHandle& h);

/// Global-registry shorthands.
std::vector<std::string> list_groups();
std::vector<std::string> list_matrices(const std::vector<std::string>& groups = {},
                                       const std::vector<PropertyTag>& props = {});

}  // namespace tmat
