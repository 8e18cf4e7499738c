#pragma once

// Umbrella header: pointwise curvature algebra, chart-based differential
// geometry, the model catalog, and the Schur-type theorem verifiers.

#include "hermlab/chart.hpp"
#include "hermlab/cli.hpp"
#include "hermlab/constancy.hpp"
#include "hermlab/curvature.hpp"
#include "hermlab/eigenframe.hpp"
#include "hermlab/hermitian_point.hpp"
#include "hermlab/linalg.hpp"
#include "hermlab/models.hpp"
#include "hermlab/planes.hpp"
#include "hermlab/report.hpp"
#include "hermlab/rng.hpp"
#include "hermlab/verify.hpp"
