#pragma once

// Umbrella header: space-filling Latin hypercube designs from nearly
// orthogonal arrays derived from spreads and covering stars of PG(p-1, 2).

#include "starlhd/correlation.hpp"
#include "starlhd/csv_io.hpp"
#include "starlhd/design_array.hpp"
#include "starlhd/existence.hpp"
#include "starlhd/flat.hpp"
#include "starlhd/gf2.hpp"
#include "starlhd/guidelines.hpp"
#include "starlhd/hash.hpp"
#include "starlhd/json_io.hpp"
#include "starlhd/lhd.hpp"
#include "starlhd/manifest.hpp"
#include "starlhd/metrics.hpp"
#include "starlhd/noa.hpp"
#include "starlhd/pencil.hpp"
#include "starlhd/rng.hpp"
#include "starlhd/simulation.hpp"
#include "starlhd/spread.hpp"
#include "starlhd/star.hpp"
#include "starlhd/strength.hpp"
#include "starlhd/types.hpp"
#include "starlhd/version.hpp"
