#pragma once

#include "dickson/errors.hpp"
#include "dickson/families.hpp"
#include "dickson/linalg.hpp"
#include "dickson/ode.hpp"
#include "dickson/polynomial.hpp"
#include "dickson/primefield.hpp"
#include "dickson/rational.hpp"
#include "dickson/specfn.hpp"
