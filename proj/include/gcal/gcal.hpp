#pragma once

// Everything: carriers, functions, families, analysis, solver, I/O and the
// acceptance battery.

#include "gcal/scalar.hpp"
#include "gcal/function.hpp"
#include "gcal/report.hpp"
#include "gcal/semigroup.hpp"
#include "gcal/fixtures.hpp"
#include "gcal/functions.hpp"
#include "gcal/families.hpp"
#include "gcal/analysis.hpp"
#include "gcal/classify.hpp"
#include "gcal/solver.hpp"
#include "gcal/io.hpp"
#include "gcal/suite.hpp"
