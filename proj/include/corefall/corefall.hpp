#pragma once

// umbrella header: the whole library

#include "corefall/core.hpp"
#include "corefall/exact.hpp"
#include "corefall/generators.hpp"
#include "corefall/graph.hpp"
#include "corefall/heuristics.hpp"
#include "corefall/json_io.hpp"
#include "corefall/objective.hpp"
#include "corefall/parallel.hpp"
#include "corefall/reductions.hpp"
#include "corefall/resilience.hpp"
#include "corefall/rng.hpp"
#include "corefall/stats.hpp"
#include "corefall/sweep.hpp"
