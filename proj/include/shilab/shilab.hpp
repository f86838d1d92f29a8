#pragma once

// Umbrella header: the whole library.
//
// shilab materializes the dictionary between the dominant regions of Shi
// arrangements, up-closed sets ("ideals") of positive roots and their
// antichains of generators, minimal alcove elements of the affine Weyl
// group, and low elements — together with brute-force oracles that
// cross-check each construction against the definitions.

#include "shilab/affine_weyl.hpp"
#include "shilab/bitset128.hpp"
#include "shilab/cartan.hpp"
#include "shilab/cone.hpp"
#include "shilab/errors.hpp"
#include "shilab/ideals.hpp"
#include "shilab/json_io.hpp"
#include "shilab/oracle.hpp"
#include "shilab/parallel.hpp"
#include "shilab/plot.hpp"
#include "shilab/rational.hpp"
#include "shilab/root_system.hpp"
#include "shilab/shi.hpp"
#include "shilab/triangle.hpp"
#include "shilab/verify.hpp"
