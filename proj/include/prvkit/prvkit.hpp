#pragma once

// Umbrella header for the library.

#include "prvkit/core.hpp"
#include "prvkit/linalg.hpp"
#include "prvkit/poly.hpp"
#include "prvkit/rootcore.hpp"
#include "prvkit/kostant.hpp"
#include "prvkit/weightmodule.hpp"
#include "prvkit/envalg.hpp"
#include "prvkit/irreps.hpp"
#include "prvkit/tensor.hpp"
#include "prvkit/charsdets.hpp"
#include "prvkit/hcmods.hpp"
