#pragma once

#include "katzp/filtration/conjugate.hpp"
#include "katzp/filtration/filtered_connection.hpp"
#include "katzp/filtration/fuzz.hpp"
#include "katzp/filtration/higgs.hpp"
#include "katzp/filtration/katz_compare.hpp"
#include "katzp/filtration/rees.hpp"
