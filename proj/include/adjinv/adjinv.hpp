#pragma once

// Umbrella header.

#include "adjinv/drazin.hpp"
#include "adjinv/elimination.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/index_sets.hpp"
#include "adjinv/io.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/minors.hpp"
#include "adjinv/parallel.hpp"
#include "adjinv/pinv.hpp"
#include "adjinv/scalar.hpp"
#include "adjinv/solvers.hpp"
#include "adjinv/verify.hpp"
