#pragma once

// Batch runner: applies an algorithm to every matching family at each
// requested size, under a configurable error policy.

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "typedmatrices/errors.hpp"
#include "typedmatrices/family.hpp"
#include "typedmatrices/groups.hpp"

namespace tmat {

/// How failures are handled. `ignore_errors` takes precedence.
struct ErrorPolicy {
  bool errors_as_warnings = false;
  bool ignore_errors = false;
};

/// A failure converted to a record under the warnings policy.
struct HarnessWarning {
  std::string message;
  friend bool operator==(const HarnessWarning&, const HarnessWarning&) = default;
};

template <typename R>
struct HarnessRecord {
  std::string family;
  std::size_t size;
  std::variant<R, HarnessWarning> outcome;

  bool ok() const noexcept { return outcome.index() == 0; }
  const R& value() const { return std::get<0>(outcome); }
  const HarnessWarning& warning() const { return std::get<1>(outcome); }
  friend bool operator==(const HarnessRecord&, const HarnessRecord&) = default;
};

/// Raised under the strict policy; names the family and size.
class HarnessError : public Error {
 public:
  HarnessError(std::string family, std::size_t size, const std::string& what)
      : Error(family + " at size " + std::to_string(size) + ": " + what),
        family_(std::move(family)),
        size_(size) {}
  const std::string& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::string family_;
  std::size_t size_;
};

struct HarnessOptions {
  std::vector<std::size_t> sizes;
  std::vector<PropertyTag> props;
  std::vector<std::string> groups;
  std::vector<std::string> exclude;  // applied after the group and property filters
  ErrorPolicy policy;
  /// Receives warning messages (default: standard error).
  std::function<void(const std::string&)> warning_sink;
  /// Runs (family, size) pairs concurrently; `fn` must be safe for that.
  bool parallel = false;
  /// Group registry used for filtering (default: the global one).
  const GroupRegistry* registry = nullptr;
};

/// Constructor arguments producing a `requested`-sized instance of the
/// family with default parameters, or nullopt when there is none (poisson
/// requires a perfect square).
std::optional<ParamArgs> feasible_size(const Family& family, std::size_t requested);
std::optional<ParamArgs> feasible_size(std::string_view family, std::size_t requested);

/// Families selected by the options' groups, props and exclude list, in
/// registration order.
std::vector<const Family*> harness_families(const HarnessOptions& options);

namespace detail {

void emit_warning(const HarnessOptions& options, const std::string& message);

}  // namespace detail

/// Applies `fn` to each matching family (registration order) at each size
/// (given order) and returns the records in that order regardless of the
/// execution mode. Under the strict policy the first failure, in that order,
/// is thrown as HarnessError.
template <typename Fn>
auto test_algorithm(Fn fn, const HarnessOptions& options)
    -> std::vector<HarnessRecord<std::decay_t<std::invoke_result_t<Fn&, const MatrixHandle&>>>> {
  using R = std::decay_t<std::invoke_result_t<Fn&, const MatrixHandle&>>;
  if (options.sizes.empty()) throw ArgumentError("test_algorithm: at least one size is required");
  for (auto s : options.sizes)
    if (s < 1) throw ArgumentError("test_algorithm: sizes must be >= 1");

  struct Task {
    const Family* family;
    std::size_t size;
    std::optional<R> value;
    std::string error;
  };
  std::vector<Task> tasks;
  for (const Family* f : harness_families(options))
    for (auto s : options.sizes) tasks.push_back({f, s, std::nullopt, {}});

  auto run = [&](Task& t) {
    try {
      auto args = feasible_size(*t.family, t.size);
      if (!args) {
        t.error = "no instance of size " + std::to_string(t.size);
        return;
      }
      const MatrixHandle h = construct(*t.family, *args);
      t.value.emplace(fn(h));
    } catch (const std::exception& e) {
      t.error = e.what();
    }
  };

  if (options.parallel && tasks.size() > 1) {
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(tasks.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) run(tasks[k]);
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (auto& t : tasks) run(t);
  }

  std::vector<HarnessRecord<R>> records;
  for (auto& t : tasks) {
    if (t.value) {
      records.push_back({t.family->id(), t.size, std::move(*t.value)});
      continue;
    }
    if (options.policy.ignore_errors) continue;
    if (!options.policy.errors_as_warnings) throw HarnessError(t.family->id(), t.size, t.error);
    const std::string message = t.family->id() + " at size " + std::to_string(t.size) + ": " + t.error;
    detail::emit_warning(options, message);
    records.push_back({t.family->id(), t.size, HarnessWarning{message}});
  }
  return records;
}

/// Wraps `fn(const DenseMatrix&)` so it receives the materialized matrix.
template <typename Fn>
auto on_dense(Fn fn) {
  return [fn](const MatrixHandle& h) { return fn(h.materialize()); };
}

}  // namespace tmat
