#pragma once

#include "dsr/overlay/ffr.hpp"
#include "dsr/overlay/frequency_plan.hpp"
#include "dsr/overlay/prb_class.hpp"
