#pragma once

#include "approxrat/bounds.hpp"
#include "approxrat/context.hpp"
#include "approxrat/continued_fraction.hpp"
#include "approxrat/errors.hpp"
#include "approxrat/integer.hpp"
#include "approxrat/rational.hpp"
#include "approxrat/rounding.hpp"
