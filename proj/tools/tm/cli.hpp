#pragma once

#include <iosfwd>

#include <typedmatrices/family.hpp>
#include <typedmatrices/groups.hpp>

namespace tmat::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs the `tm` command line against the given registries, writing
/// records to `out` and diagnostics to `err`. Returns the exit code.
int run(int argc, const char* const* argv, FamilyRegistry& families, GroupRegistry& groups, std::ostream& out,
        std::ostream& err);

}  // namespace tmat::cli
