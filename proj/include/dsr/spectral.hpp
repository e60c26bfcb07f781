#pragma once

#include "dsr/spectral/frequency_grid.hpp"
#include "dsr/spectral/ics.hpp"
#include "dsr/spectral/interference.hpp"
#include "dsr/spectral/leakage_mask.hpp"
#include "dsr/spectral/lte_psd.hpp"
#include "dsr/spectral/ofdm.hpp"
#include "dsr/spectral/puncture_plan.hpp"
#include "dsr/spectral/reference_layout.hpp"
#include "dsr/spectral/sinr_cap.hpp"
