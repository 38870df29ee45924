#pragma once

#include "halfint/error.hpp"
#include "halfint/flows.hpp"
#include "halfint/graph.hpp"
#include "halfint/linalg.hpp"
#include "halfint/lp.hpp"
#include "halfint/parallel.hpp"
#include "halfint/rational.hpp"
#include "halfint/skeleton.hpp"
#include "halfint/xi.hpp"
#include "halfint/zonotope.hpp"
