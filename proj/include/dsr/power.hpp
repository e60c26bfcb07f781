#pragma once

#include "dsr/power/appendix_solver.hpp"
#include "dsr/power/build.hpp"
#include "dsr/power/oracle.hpp"
#include "dsr/power/problem.hpp"
#include "dsr/power/rate_sweep.hpp"
#include "dsr/power/waterfilling.hpp"
