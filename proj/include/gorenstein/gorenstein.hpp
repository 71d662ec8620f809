#pragma once

#include "gorenstein/field.hpp"
#include "gorenstein/polynomial.hpp"
#include "gorenstein/groebner.hpp"
#include "gorenstein/linalg.hpp"
#include "gorenstein/artin_algebra.hpp"
#include "gorenstein/assoc_graded.hpp"
#include "gorenstein/connected_sums.hpp"
#include "gorenstein/decomposition.hpp"
#include "gorenstein/power_series.hpp"
#include "gorenstein/resolutions.hpp"
#include "gorenstein/inverse_systems.hpp"
#include "gorenstein/ring_io.hpp"
#include "gorenstein/json_io.hpp"
