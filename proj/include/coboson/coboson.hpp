#pragma once

#include "coboson/analytic.hpp"
#include "coboson/check.hpp"
#include "coboson/chi_ratio.hpp"
#include "coboson/clamped.hpp"
#include "coboson/curves.hpp"
#include "coboson/errors.hpp"
#include "coboson/parallel.hpp"
#include "coboson/root.hpp"
#include "coboson/schmidt.hpp"
#include "coboson/summation.hpp"
#include "coboson/sweeps.hpp"
#include "coboson/trap.hpp"
#include "coboson/two_level.hpp"
#include "coboson/units.hpp"
