#pragma once

// Sumij, a(i,j) = i + j: an example of a family defined outside the core
// library through its public extension API.

#include <typedmatrices/family.hpp>
#include <typedmatrices/groups.hpp>

namespace sumij {

/// Descriptor and routines for sumij(m, n = m).
tmat::Family make_family();

/// Registers sumij and adds it to the `user` group. Throws
/// tmat::LookupError if a family named sumij is already registered.
const tmat::Family& install(tmat::FamilyRegistry& families, tmat::GroupRegistry& groups);

/// Installs into the process-wide registries.
const tmat::Family& install();

}  // namespace sumij
