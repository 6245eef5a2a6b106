#pragma once

#include "nonstatic/dynamics.hpp"
#include "nonstatic/errors.hpp"
#include "nonstatic/grid.hpp"
#include "nonstatic/observables.hpp"
#include "nonstatic/params.hpp"
#include "nonstatic/version.hpp"
#include "nonstatic/wavefunctions.hpp"
#include "nonstatic/wigner.hpp"
