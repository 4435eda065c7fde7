#pragma once

// Umbrella header for the reaction-systems toolkit.

#include "rsys/core.hpp"
#include "rsys/dynamics.hpp"
#include "rsys/encode.hpp"
#include "rsys/errors.hpp"
#include "rsys/formula.hpp"
#include "rsys/logic.hpp"
#include "rsys/polytime.hpp"
#include "rsys/reductions.hpp"
#include "rsys/solve.hpp"
#include "rsys/state.hpp"
#include "rsys/textio.hpp"
