#pragma once

#include "crankparity/bigint.hpp"
#include "crankparity/circle.hpp"
#include "crankparity/crank_series.hpp"
#include "crankparity/distinct.hpp"
#include "crankparity/error.hpp"
#include "crankparity/fivetower.hpp"
#include "crankparity/partition.hpp"
#include "crankparity/real.hpp"
#include "crankparity/series.hpp"
