#pragma once

#include "lrkm/error.hpp"
#include "lrkm/expr.hpp"
#include "lrkm/fracops.hpp"
#include "lrkm/polynomial.hpp"
#include "lrkm/real.hpp"
#include "lrkm/rkhs.hpp"
#include "lrkm/solver.hpp"
