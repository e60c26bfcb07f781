#pragma once

#include "dsr/geometry/antenna.hpp"
#include "dsr/geometry/hex_layout.hpp"
#include "dsr/geometry/link_budget.hpp"
#include "dsr/geometry/propagation.hpp"
#include "dsr/geometry/ue_drop.hpp"
