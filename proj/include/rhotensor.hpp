#pragma once

#include "rhotensor/exact.hpp"
#include "rhotensor/weight.hpp"
#include "rhotensor/rootdata.hpp"
#include "rhotensor/charcalc.hpp"
#include "rhotensor/cache.hpp"
#include "rhotensor/tensor.hpp"
#include "rhotensor/affine.hpp"
#include "rhotensor/harness.hpp"
#include "rhotensor/format.hpp"
