#pragma once

// Umbrella header: exact-arithmetic verification toolkit for the
// cover-construction certificate suite.

#include "fpp/builtin_configs.hpp"
#include "fpp/chern.hpp"
#include "fpp/claims.hpp"
#include "fpp/descent.hpp"
#include "fpp/descent_goldens.hpp"
#include "fpp/feasibility.hpp"
#include "fpp/glue.hpp"
#include "fpp/int_matrix.hpp"
#include "fpp/lattice.hpp"
#include "fpp/numeric.hpp"
#include "fpp/overlattice.hpp"
#include "fpp/registry.hpp"
#include "fpp/report.hpp"
#include "fpp/run.hpp"
#include "fpp/smith.hpp"
#include "fpp/solve.hpp"
#include "fpp/surface.hpp"
#include "fpp/surface_io.hpp"
