#pragma once

#include "katzp/cli/commands.hpp"
#include "katzp/cli/family_config.hpp"
#include "katzp/cli/log.hpp"
