#pragma once

#include "bigint.hpp"
#include "colored_permutation.hpp"
#include "cycles.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "notation.hpp"
#include "power_series.hpp"
#include "statistics.hpp"
#include "tables.hpp"
#include "verify.hpp"
#include "bijections/fixed_point_maps.hpp"
#include "bijections/recurrence_maps.hpp"
#include "bijections/succession_maps.hpp"
