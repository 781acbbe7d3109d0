#pragma once

#include "katzp/exactcore/binomial.hpp"
#include "katzp/exactcore/error.hpp"
#include "katzp/exactcore/fp.hpp"
#include "katzp/exactcore/kernel.hpp"
#include "katzp/exactcore/matrix.hpp"
#include "katzp/exactcore/poly.hpp"
#include "katzp/exactcore/rational_function.hpp"
#include "katzp/exactcore/truncated_ring.hpp"
