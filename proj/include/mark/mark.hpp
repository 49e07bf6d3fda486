#pragma once

// Umbrella header for the metrics library (no I/O).
#include "mark/belief.hpp"
#include "mark/choice_tree.hpp"
#include "mark/comparators.hpp"
#include "mark/error.hpp"
#include "mark/knowledge.hpp"
#include "mark/ordering.hpp"
#include "mark/pi_profile.hpp"
#include "mark/quadrature.hpp"
#include "mark/tracking.hpp"
