#pragma once

#include "dsr/sim/drop_runner.hpp"
#include "dsr/sim/pf_scheduler.hpp"
#include "dsr/sim/rate_stats.hpp"
#include "dsr/sim/scenario.hpp"
