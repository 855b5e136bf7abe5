#pragma once

#include "core.hpp"
#include "parallel.hpp"
#include "scalars.hpp"
#include "solver.hpp"
#include "counting.hpp"
#include "constructions.hpp"
#include "random_lab.hpp"
#include "io.hpp"
