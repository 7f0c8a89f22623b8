#pragma once

// Umbrella header: exact sup-norms, extreme points, and sharp constants for
// real 2-homogeneous polynomials on the pi/4 circle sector.

#include "octant/bernstein.hpp"
#include "octant/extremals.hpp"
#include "octant/figures.hpp"
#include "octant/format.hpp"
#include "octant/oracle.hpp"
#include "octant/polarization.hpp"
#include "octant/poly.hpp"
#include "octant/unconditional.hpp"
#include "octant/verify.hpp"
