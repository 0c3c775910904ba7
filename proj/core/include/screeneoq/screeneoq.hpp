#pragma once

#include "screeneoq/costs.hpp"
#include "screeneoq/model.hpp"
#include "screeneoq/optimize.hpp"
#include "screeneoq/quadrature.hpp"
#include "screeneoq/reference.hpp"
#include "screeneoq/scenario_io.hpp"
#include "screeneoq/simulate.hpp"
#include "screeneoq/types.hpp"
