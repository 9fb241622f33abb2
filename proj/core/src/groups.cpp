#include "typedmatrices/groups.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "typedmatrices/errors.hpp"

namespace tmat {

namespace {

bool contains(const std::vector<std::string>& v, std::string_view x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

void require_mutable(std::string_view group) {
  if (group == kBuiltinGroup) throw ArgumentError("group 'builtin' is immutable");
}

}  // namespace

GroupRegistry::GroupRegistry(const FamilyRegistry& families) : families_(&families) {
  std::vector<std::string> builtin;
  for (const auto& id : builtin_family_ids())
    if (families.contains(id)) builtin.push_back(id);
  groups_.emplace_back(std::string(kUserGroup), std::vector<std::string>{});
  groups_.emplace_back(std::string(kBuiltinGroup), std::move(builtin));
}

GroupRegistry::Group* GroupRegistry::find_locked(std::string_view name) {
  for (auto& g : groups_)
    if (g.first == name) return &g;
  return nullptr;
}

const GroupRegistry::Group* GroupRegistry::find_locked(std::string_view name) const {
  for (const auto& g : groups_)
    if (g.first == name) return &g;
  return nullptr;
}

std::vector<std::string> GroupRegistry::list_groups() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& g : groups_) out.push_back(g.first);
  return out;
}

bool GroupRegistry::has_group(std::string_view group) const {
  std::shared_lock lock(mutex_);
  return find_locked(group) != nullptr;
}

std::vector<std::string> GroupRegistry::members(std::string_view group) const {
  std::shared_lock lock(mutex_);
  if (const Group* g = find_locked(group)) return g->second;
  throw LookupError("unknown group '" + std::string(group) + "'");
}

void GroupRegistry::add_locked(std::string_view family, std::string_view group) {
  Group* g = find_locked(group);
  if (!g) g = &groups_.emplace_back(std::string(group), std::vector<std::string>{});
  if (!contains(g->second, family)) g->second.emplace_back(family);
}

void GroupRegistry::add_to_groups(std::string_view family, const std::vector<std::string>& groups) {
  if (!families_->contains(family)) throw LookupError("unknown family '" + std::string(family) + "'");
  for (const auto& g : groups) {
    require_mutable(g);
    if (g.empty()) throw ArgumentError("group name must not be empty");
  }
  std::unique_lock lock(mutex_);
  for (const auto& g : groups) add_locked(family, g);
}

void GroupRegistry::remove_from_group(std::string_view family, std::string_view group) {
  require_mutable(group);
  std::unique_lock lock(mutex_);
  Group* g = find_locked(group);
  if (!g) throw LookupError("unknown group '" + std::string(group) + "'");
  auto it = std::find(g->second.begin(), g->second.end(), family);
  if (it == g->second.end()) {
    throw LookupError("family '" + std::string(family) + "' is not in group '" + std::string(group) + "'");
  }
  g->second.erase(it);
  if (g->second.empty() && group != kUserGroup) {
    groups_.erase(groups_.begin() + (g - groups_.data()));
  }
}

void GroupRegistry::remove_from_all_groups(std::string_view family) {
  std::unique_lock lock(mutex_);
  for (auto& g : groups_) {
    if (g.first == kBuiltinGroup) continue;
    std::erase(g.second, family);
  }
  std::erase_if(groups_, [](const Group& g) {
    return g.second.empty() && g.first != kUserGroup && g.first != kBuiltinGroup;
  });
}

void GroupRegistry::write_group(std::string_view group, std::ostream& out) const {
  const auto ids = members(group);
  out << kGroupFileHeader << '\n';
  for (const auto& id : ids) out << id << '\n';
  if (!out) throw IoError("failed to write group '" + std::string(group) + "'");
}

void GroupRegistry::save_group(std::string_view group, const std::filesystem::path& path) const {
  std::ostringstream buffer;
  write_group(group, buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << buffer.str();
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void GroupRegistry::read_group(std::string_view group, std::istream& in) {
  require_mutable(group);
  if (group.empty()) throw ArgumentError("group name must not be empty");
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (content.empty()) throw ParseError("empty group file", 1);
  if (content.back() != '\n') {
    const auto lines = static_cast<std::size_t>(std::count(content.begin(), content.end(), '\n')) + 1;
    throw ParseError("group file must end with a newline", lines);
  }

  std::istringstream lines(content);
  std::string line;
  std::size_t number = 0;
  std::vector<std::string> ids;
  std::vector<std::string> unknown;
  while (std::getline(lines, line)) {
    ++number;
    if (number == 1) {
      if (trim(line) != kGroupFileHeader) {
        throw ParseError("expected header '" + std::string(kGroupFileHeader) + "'", number);
      }
      continue;
    }
    const std::string id = trim(line);
    if (id.empty() || id.front() == '#') continue;
    if (id.find_first_of(" \t") != std::string::npos) throw ParseError("invalid family id '" + id + "'", number);
    if (!families_->contains(id)) {
      if (!contains(unknown, id)) unknown.push_back(id);
      continue;
    }
    if (!contains(ids, id)) ids.push_back(id);
  }
  if (!unknown.empty()) {
    std::string msg = "group file references unregistered families:";
    for (const auto& id : unknown) msg += " " + id;
    throw LookupError(msg);
  }
  std::unique_lock lock(mutex_);
  if (ids.empty() && group != kUserGroup && !find_locked(group)) {
    throw ArgumentError("group file lists no families; groups cannot be empty");
  }
  if (ids.empty()) {
    if (!find_locked(group)) groups_.emplace_back(std::string(group), std::vector<std::string>{});
    return;
  }
  for (const auto& id : ids) add_locked(id, group);
}

void GroupRegistry::load_group(std::string_view group, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  read_group(group, in);
}

std::vector<std::string> GroupRegistry::list_matrices(const std::vector<std::string>& groups,
                                                      const std::vector<PropertyTag>& props) const {
  std::vector<std::vector<std::string>> sets;
  {
    std::shared_lock lock(mutex_);
    for (const auto& name : groups) {
      const Group* g = find_locked(name);
      if (!g) throw LookupError("unknown group '" + name + "'");
      sets.push_back(g->second);
    }
  }
  std::vector<std::string> out;
  for (const Family* f : families_->families()) {
    const auto& tags = f->descriptor.tags;
    bool keep = std::all_of(sets.begin(), sets.end(), [&](const auto& s) { return contains(s, f->id()); });
    keep = keep && std::all_of(props.begin(), props.end(), [&](PropertyTag p) {
             return std::find(tags.begin(), tags.end(), p) != tags.end();
           });
    if (keep) out.push_back(f->id());
  }
  return out;
}

GroupRegistry& GroupRegistry::global() {
  static GroupRegistry registry(FamilyRegistry::global());
  return registry;
}

std::vector<PropertyTag> properties_of(const FamilyRegistry& registry, std::string_view family) {
  return registry.get(family).descriptor.tags;
}

std::vector<PropertyTag> properties_of(std::string_view family) {
  return properties_of(FamilyRegistry::global(), family);
}

std::vector<PropertyTag> properties_of(const MatrixHandle& h) { return h.family().descriptor.tags; }

std::vector<std::string> list_groups() { return GroupRegistry::global().list_groups(); }

std::vector<std::string> list_matrices(const std::vector<std::string>& groups,
                                       const std::vector<PropertyTag>& props) {
  return GroupRegistry::global().list_matrices(groups, props);
}

}  // namespace tmat
