#pragma once

#include "katzp/pdcalc/frobenius_kernel.hpp"
#include "katzp/pdcalc/fuzz.hpp"
#include "katzp/pdcalc/pd_sequence.hpp"
