#pragma once

// Umbrella header: binary-field arithmetic, tower subgroups, c-differential
// spectra, the certification checkers, and the CLI front end.

#include "ffa/cache.hpp"
#include "ffa/cli.hpp"
#include "ffa/errors.hpp"
#include "ffa/field.hpp"
#include "ffa/parallel.hpp"
#include "ffa/poly.hpp"
#include "ffa/power_function.hpp"
#include "ffa/report.hpp"
#include "ffa/subgroup.hpp"
#include "ffa/tower.hpp"
#include "ffa/verifier.hpp"
#include "ffa/version.hpp"
