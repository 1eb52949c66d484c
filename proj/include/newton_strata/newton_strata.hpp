#pragma once

/// Umbrella header: pulls in the whole library.

#include "newton_strata/errors.hpp"
#include "newton_strata/json_io.hpp"
#include "newton_strata/levi.hpp"
#include "newton_strata/newton_class.hpp"
#include "newton_strata/polygon.hpp"
#include "newton_strata/rational.hpp"
#include "newton_strata/strata.hpp"
#include "newton_strata/svg_render.hpp"
