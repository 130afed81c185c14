#pragma once

// Umbrella header: exact Severi-degree computations for rational curves on
// P2, P1 x P1 and the Hirzebruch surfaces.

#include "severi/count.hpp"
#include "severi/errors.hpp"
#include "severi/fn2c.hpp"
#include "severi/fngeneral.hpp"
#include "severi/ntable.hpp"
#include "severi/store.hpp"
#include "severi/surface.hpp"
