#pragma once

// Umbrella header for the whole public API.

#include "typedmatrices/audit.hpp"
#include "typedmatrices/catalog.hpp"
#include "typedmatrices/dense.hpp"
#include "typedmatrices/dense_linalg.hpp"
#include "typedmatrices/errors.hpp"
#include "typedmatrices/family.hpp"
#include "typedmatrices/groups.hpp"
#include "typedmatrices/harness.hpp"
#include "typedmatrices/linalg.hpp"
#include "typedmatrices/matrix.hpp"
#include "typedmatrices/mmio.hpp"
#include "typedmatrices/params.hpp"
#include "typedmatrices/property.hpp"
#include "typedmatrices/rational.hpp"
#include "typedmatrices/scalar.hpp"
