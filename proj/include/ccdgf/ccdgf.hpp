#pragma once

#include "ccdgf/boxops.hpp"
#include "ccdgf/cgf.hpp"
#include "ccdgf/core.hpp"
#include "ccdgf/gf.hpp"
#include "ccdgf/igf.hpp"
#include "ccdgf/metrics.hpp"
#include "ccdgf/pnm.hpp"
#include "ccdgf/rfnf.hpp"
#include "ccdgf/rmsf.hpp"
#include "ccdgf/synth.hpp"
#include "ccdgf/tvgf.hpp"
