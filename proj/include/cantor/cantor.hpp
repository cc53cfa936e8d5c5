#pragma once

// Umbrella header for the library proper (io.hpp additionally needs nlohmann/json).

#include "cantor/budget.hpp"
#include "cantor/cantor_approx.hpp"
#include "cantor/cover.hpp"
#include "cantor/davies.hpp"
#include "cantor/dyadic.hpp"
#include "cantor/error.hpp"
#include "cantor/gap_function.hpp"
#include "cantor/gap_sequence.hpp"
#include "cantor/gauge.hpp"
#include "cantor/interval.hpp"
#include "cantor/metric.hpp"
#include "cantor/qlinear.hpp"
#include "cantor/rational.hpp"
#include "cantor/recover.hpp"
#include "cantor/tree_assign.hpp"
