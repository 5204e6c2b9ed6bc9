#pragma once

#include "mrgp/error.hpp"
#include "mrgp/integer.hpp"
#include "mrgp/field.hpp"
#include "mrgp/units.hpp"
#include "mrgp/norm_solve.hpp"
#include "mrgp/algorithm.hpp"
#include "mrgp/closed_forms.hpp"
#include "mrgp/oracle.hpp"
