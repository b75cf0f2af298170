#pragma once

#include "errors.hpp"
#include "fixtures.hpp"
#include "grid.hpp"
#include "pade.hpp"
#include "pde_dsl.hpp"
#include "report.hpp"
#include "solver.hpp"
#include "tanh_poly.hpp"
#include "time_series.hpp"
#include "traveling_wave.hpp"
