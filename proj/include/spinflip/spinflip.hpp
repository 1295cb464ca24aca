#pragma once

// Umbrella header: magnetic spin-flip rates and lifetimes for a two-level
// atom above a conducting half-space.

#include "spinflip/constants.hpp"
#include "spinflip/fresnel.hpp"
#include "spinflip/halfspace.hpp"
#include "spinflip/materials.hpp"
#include "spinflip/numeric.hpp"
#include "spinflip/quadrature.hpp"
#include "spinflip/rates.hpp"
#include "spinflip/scenario.hpp"
#include "spinflip/transition.hpp"
