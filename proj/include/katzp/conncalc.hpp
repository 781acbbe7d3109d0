#pragma once

#include "katzp/conncalc/connection.hpp"
#include "katzp/conncalc/fuzz.hpp"
#include "katzp/conncalc/lambda_connection.hpp"
#include "katzp/conncalc/p_curvature.hpp"
#include "katzp/conncalc/taylor.hpp"
