#pragma once

// Umbrella header: the whole library in one include.

#include "sumtree/construct.hpp"
#include "sumtree/io.hpp"
#include "sumtree/random.hpp"
#include "sumtree/solve.hpp"
#include "sumtree/tree.hpp"
#include "sumtree/verify.hpp"
