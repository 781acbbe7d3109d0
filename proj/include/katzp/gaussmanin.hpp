#pragma once

#include "katzp/gaussmanin/cartier.hpp"
#include "katzp/gaussmanin/cartier_data.hpp"
#include "katzp/gaussmanin/family.hpp"
#include "katzp/gaussmanin/gauss_manin.hpp"
