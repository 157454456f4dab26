#pragma once

#include "types.hpp"
#include "linalg.hpp"
#include "mub.hpp"
#include "eavesdrop.hpp"
#include "bell.hpp"
#include "report.hpp"
#include "commands.hpp"
