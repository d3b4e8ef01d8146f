#pragma once

#include "sar/errors.hpp"
#include "sar/parameters.hpp"
#include "sar/state.hpp"
#include "sar/model.hpp"
#include "sar/polynomial.hpp"
#include "sar/equilibria.hpp"
#include "sar/ode.hpp"
#include "sar/stochastic.hpp"
#include "sar/bifurcation.hpp"
#include "sar/io.hpp"
