#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <typedmatrices/audit.hpp>
#include <typedmatrices/errors.hpp>
#include <typedmatrices/harness.hpp>
#include <typedmatrices/linalg.hpp>
#include <typedmatrices/mmio.hpp>

namespace tmat::cli {

namespace {

/// Bad invocation: exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::filesystem::path group_dir() {
  if (const char* dir = std::getenv("TM_GROUP_DIR"); dir && *dir) return dir;
  return std::filesystem::current_path();
}

/// Makes `name` available, loading `<TM_GROUP_DIR>/<name>.grp` if it is not
/// already defined.
void resolve_group(GroupRegistry& groups, const std::string& name) {
  if (groups.has_group(name)) return;
  const auto path = group_dir() / (name + ".grp");
  if (!std::filesystem::exists(path)) throw LookupError("unknown group '" + name + "' (no " + path.string() + ")");
  groups.load_group(name, path);
}

std::vector<PropertyTag> parse_props(const std::vector<std::string>& names) {
  std::vector<PropertyTag> out;
  for (const auto& n : names) out.push_back(property_from_name(n));
  return out;
}

std::optional<ScalarKind> parse_kind(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (auto k = parse_scalar_kind(text)) return k;
  throw UsageError("unknown scalar type '" + text + "' (expected f64 or rat)");
}

/// Converts `--param name=value` strings according to the family schema.
ParamArgs parse_params(const Family& family, const std::vector<std::string>& items) {
  ParamArgs args;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    const auto& specs = family.descriptor.params;
    auto spec = std::find_if(specs.begin(), specs.end(), [&](const ParamSpec& p) { return p.name == name; });
    if (spec == specs.end()) {
      std::string msg = "unknown parameter '" + name + "' for " + family.id() + "; expected:";
      for (const auto& p : specs) msg += " " + p.name;
      throw UsageError(msg);
    }
    try {
      switch (spec->type) {
        case ParamType::dimension:
        case ParamType::integer: {
          std::size_t used = 0;
          const long long v = std::stoll(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
          args.set(name, static_cast<std::int64_t>(v));
          break;
        }
        case ParamType::scalar: args.set(name, Scalar::parse(value)); break;
        case ParamType::flag:
          if (value == "true" || value == "1") {
            args.set(name, true);
          } else if (value == "false" || value == "0") {
            args.set(name, false);
          } else {
            throw std::invalid_argument(value);
          }
          break;
        case ParamType::vector: {
          std::vector<Scalar> v;
          std::stringstream ss(value);
          for (std::string tok; std::getline(ss, tok, ',');) v.push_back(Scalar::parse(tok));
          args.set(name, std::move(v));
          break;
        }
      }
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid value '" + value + "' for parameter '" + name + "' (" +
                       std::string(to_string(spec->type)) + ")");
    } catch (const std::out_of_range&) {
      throw UsageError("value '" + value + "' for parameter '" + name + "' is out of range");
    } catch (const ArgumentError& e) {
      throw UsageError(std::string("parameter '") + name + "': " + e.what());
    }
  }
  return args;
}

/// Handle for `family n [--param ...] [--type ...]`; n is the family's `n`.
MatrixHandle make_handle(const FamilyRegistry& families, const std::string& id, long long n,
                         const std::vector<std::string>& params, const std::string& type) {
  if (n < 0) throw UsageError("size must be >= 0, got " + std::to_string(n));
  const Family& family = families.get(id);
  ParamArgs args = parse_params(family, params);
  args.set("n", static_cast<std::int64_t>(n));
  try {
    return construct(family, args, parse_kind(type));
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
}

template <typename F>
long long time_ns(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

long long median(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

double lazy_sum(const MatrixHandle& h) {
  double s = 0;
  for (std::size_t j = 1; j <= h.cols(); ++j)
    for (std::size_t i = 1; i <= h.rows(); ++i) s += h.element_unchecked(i, j).to_double();
  return s;
}

double dense_sum(const DenseMatrix& a) {
  return a.visit([](const auto& d) {
    double s = 0;
    for (const auto& x : d.data()) s += dense::to_double(x);
    return s;
  });
}

struct Common {
  std::string family;
  long long n = 0;
  std::vector<std::string> params;
  std::string type;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("family", c.family, "Family id")->required();
  cmd->add_option("n", c.n, "Size parameter n (poisson: grid size, matrix is n^2 x n^2)")->required();
  cmd->add_option("--param", c.params, "Family parameter name=value (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd->add_option("--type", c.type, "Scalar kind: f64 or rat (default: the family's)");
}

}  // namespace

int run(int argc, const char* const* argv, FamilyRegistry& families, GroupRegistry& groups, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"tm: test matrix catalog. Records go to stdout, one per line, fields tab-separated."};
  app.require_subcommand(1);

  // list
  std::vector<std::string> list_groups, list_props;
  auto* list = app.add_subcommand("list", "List family ids (default group: builtin). Output: one id per line.");
  list->add_option("--group", list_groups, "Restrict to a group (repeatable; intersection)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  list->add_option("--prop", list_props, "Require a property (repeatable; conjunction)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  // show
  Common show_args;
  auto* show = app.add_subcommand("show", "Print a matrix. Output: one row per line, entries tab-separated.");
  add_common(show, show_args);

  // export
  Common export_args;
  std::string export_format = "mm-array";
  std::string export_path;
  bool export_symmetric = false;
  double export_tol = 0.0;
  auto* exp = app.add_subcommand("export", "Write a Matrix Market file.");
  add_common(exp, export_args);
  exp->add_option("--format", export_format, "mm-array or mm-coordinate")
      ->check(CLI::IsMember({"mm-array", "mm-coordinate"}));
  exp->add_option("-o,--output", export_path, "Output path")->required();
  exp->add_flag("--symmetric", export_symmetric, "mm-array: store the lower triangle only");
  exp->add_option("--zero-tol", export_tol, "mm-coordinate: drop entries with |v| <= tol");

  // audit
  std::vector<std::string> audit_groups, audit_families, audit_params;
  std::vector<std::size_t> audit_sizes;
  auto* aud = app.add_subcommand(
      "audit", "Check declared property tags. Output: family, size, tag, verdict[, detail]. Exit 1 on any fail.");
  aud->add_option("--group", audit_groups, "Audit every family of a group (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  aud->add_option("--family", audit_families, "Audit one family (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  aud->add_option("--size", audit_sizes, "Size n (repeatable; default 1 2 3 4 5 8)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  aud->add_option("--param", audit_params, "Explicit parameter name=value for --family audits")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  // bench
  Common bench_args;
  std::string bench_op = "det";
  bool bench_dense = false;
  int bench_reps = 5;
  auto* bench = app.add_subcommand(
      "bench", "Time an operation. Output: family, n, op, mode, reps, median_ns, value, exact value.");
  add_common(bench, bench_args);
  bench->add_option("--op", bench_op, "det, sum or issymmetric")
      ->check(CLI::IsMember({"det", "sum", "issymmetric"}));
  bench->add_flag("--dense", bench_dense, "Run the generic routine on a stored dense copy");
  bench->add_option("--reps", bench_reps, "Repetitions (>= 5)")->check(CLI::Range(5, 1000000));

  // group
  auto* grp = app.add_subcommand("group", "Group management.");
  grp->require_subcommand(1);
  auto* grp_list = grp->add_subcommand("list", "List groups, one per line.");
  std::string save_name, save_path;
  std::vector<std::string> save_add;
  auto* grp_save = grp->add_subcommand("save", "Save a group to a file (default: $TM_GROUP_DIR/NAME.grp).");
  grp_save->add_option("name", save_name, "Group name")->required();
  grp_save->add_option("--add", save_add, "Add a family to the group before saving (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  grp_save->add_option("-o,--output", save_path, "Output path");
  std::string load_name, load_path;
  auto* grp_load = grp->add_subcommand("load", "Load a group file and print its members, one per line.");
  grp_load->add_option("name", load_name, "Group name")->required();
  grp_load->add_option("file", load_path, "Group file")->required();
  std::string members_name;
  auto* grp_show = grp->add_subcommand("show", "Print a group's members, one per line.");
  grp_show->add_option("name", members_name, "Group name")->required();

  // harness
  std::string harness_fn = "sum";
  std::vector<std::size_t> harness_sizes;
  std::vector<std::string> harness_props, harness_groups, harness_exclude;
  bool harness_warn = false, harness_ignore = false;
  auto* har = app.add_subcommand(
      "harness", "Apply a built-in function to matching families. Output: family, size, value (or warning, message).");
  har->add_option("--fn", harness_fn, "det-positive, sum, issymmetric or timing")
      ->check(CLI::IsMember({"det-positive", "sum", "issymmetric", "timing"}));
  har->add_option("--size", harness_sizes, "Matrix size (repeatable)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  har->add_option("--prop", harness_props, "Required property (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  har->add_option("--group", harness_groups, "Required group (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  har->add_option("--exclude", harness_exclude, "Excluded family (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  har->add_flag("--warn", harness_warn, "Convert errors to warnings");
  har->add_flag("--ignore-errors", harness_ignore, "Skip failing pairs silently (overrides --warn)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*list) {
      for (const auto& g : list_groups) resolve_group(groups, g);
      const auto gs = list_groups.empty() ? std::vector<std::string>{std::string(kBuiltinGroup)} : list_groups;
      for (const auto& id : groups.list_matrices(gs, parse_props(list_props))) out << id << '\n';
      return kOk;
    }

    if (*show) {
      const MatrixHandle h =
          make_handle(families, show_args.family, show_args.n, show_args.params, show_args.type);
      for (std::size_t i = 1; i <= h.rows(); ++i) {
        for (std::size_t j = 1; j <= h.cols(); ++j) out << (j > 1 ? "\t" : "") << h.element(i, j).to_string();
        out << '\n';
      }
      return kOk;
    }

    if (*exp) {
      const MatrixHandle h =
          make_handle(families, export_args.family, export_args.n, export_args.params, export_args.type);
      if (export_format == "mm-array") {
        export_array(h, std::filesystem::path(export_path), export_symmetric);
      } else {
        export_coordinate(h, std::filesystem::path(export_path), export_tol);
      }
      return kOk;
    }

    if (*aud) {
      std::vector<std::string> ids = audit_families;
      if (ids.empty() && audit_groups.empty()) audit_groups.emplace_back(kBuiltinGroup);
      if (!audit_groups.empty()) {
        for (const auto& g : audit_groups) resolve_group(groups, g);
        for (const auto& id : groups.list_matrices(audit_groups))
          if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
      }
      if (audit_sizes.empty()) audit_sizes = {1, 2, 3, 4, 5, 8};
      AuditOptions options;
      if (!audit_params.empty()) {
        if (ids.size() != 1) throw UsageError("--param requires exactly one --family");
        options.params = parse_params(families.get(ids.front()), audit_params);
      }
      std::size_t fails = 0;
      for (const auto& id : ids) {
        const AuditReport report = audit(families, id, audit_sizes, options);
        write_report(out, report);
        fails += report.count(Verdict::fail);
      }
      if (fails > 0) {
        err << "audit: " << fails << " failing verdict(s)\n";
        return kDomainError;
      }
      return kOk;
    }

    if (*bench) {
      const MatrixHandle h =
          make_handle(families, bench_args.family, bench_args.n, bench_args.params, bench_args.type);
      std::vector<long long> times;
      Scalar value;
      std::optional<DenseMatrix> stored;
      if (bench_dense) stored = h.materialize();
      for (int r = 0; r < bench_reps; ++r) {
        times.push_back(time_ns([&] {
          if (bench_op == "det") {
            value = bench_dense ? generic::determinant(*stored) : determinant(h);
          } else if (bench_op == "sum") {
            value = bench_dense ? dense_sum(*stored) : lazy_sum(h);
          } else {
            const bool sym = bench_dense ? generic::is_symmetric(*stored) : is_symmetric(h);
            value = Scalar(static_cast<std::int64_t>(sym));
          }
        }));
      }
      std::string shown = format_double(value.to_double());
      if (bench_op == "issymmetric") shown = value.to_double() != 0 ? "true" : "false";
      out << h.family_id() << '\t' << bench_args.n << '\t' << bench_op << '\t' << (bench_dense ? "dense" : "lazy")
          << '\t' << bench_reps << '\t' << median(times) << '\t' << shown << '\t'
          << (bench_op == "issymmetric" ? shown : value.to_string()) << '\n';
      return kOk;
    }

    if (*grp) {
      if (*grp_list) {
        for (const auto& g : groups.list_groups()) out << g << '\n';
      } else if (*grp_save) {
        if (!save_add.empty()) groups.add_to_groups(save_add.front(), {save_name});
        for (std::size_t k = 1; k < save_add.size(); ++k) groups.add_to_groups(save_add[k], {save_name});
        if (save_add.empty()) resolve_group(groups, save_name);
        const auto path = save_path.empty() ? group_dir() / (save_name + ".grp") : std::filesystem::path(save_path);
        groups.save_group(save_name, path);
        out << path.string() << '\n';
      } else if (*grp_load) {
        groups.load_group(load_name, std::filesystem::path(load_path));
        for (const auto& id : groups.members(load_name)) out << id << '\n';
      } else if (*grp_show) {
        resolve_group(groups, members_name);
        for (const auto& id : groups.members(members_name)) out << id << '\n';
      }
      return kOk;
    }

    if (*har) {
      for (const auto& g : harness_groups) resolve_group(groups, g);
      HarnessOptions options;
      options.sizes = harness_sizes;
      options.props = parse_props(harness_props);
      options.groups = harness_groups;
      options.exclude = harness_exclude;
      options.policy = {harness_warn, harness_ignore};
      options.warning_sink = [&](const std::string& m) { err << "warning: " << m << '\n'; };
      options.registry = &groups;
      auto fn = [&](const MatrixHandle& h) -> std::string {
        if (harness_fn == "det-positive") return determinant(h).to_double() > 0 ? "true" : "false";
        if (harness_fn == "sum") return format_double(lazy_sum(h));
        if (harness_fn == "issymmetric") return is_symmetric(h) ? "true" : "false";
        return std::to_string(time_ns([&] { (void)h.materialize(); }));
      };
      for (const auto& rec : test_algorithm(fn, options)) {
        out << rec.family << '\t' << rec.size << '\t';
        if (rec.ok()) {
          out << rec.value() << '\n';
        } else {
          out << "warning\t" << rec.warning().message << '\n';
        }
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "tm: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "tm: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace tmat::cli
