#pragma once

#include "midtree/census.hpp"
#include "midtree/combine.hpp"
#include "midtree/encode.hpp"
#include "midtree/io.hpp"
#include "midtree/lp.hpp"
#include "midtree/midpoints.hpp"
#include "midtree/oracle.hpp"
#include "midtree/realization.hpp"
#include "midtree/realize.hpp"
#include "midtree/reduction.hpp"
#include "midtree/sat.hpp"
#include "midtree/split.hpp"
#include "midtree/tree_metric.hpp"
#include "midtree/triples.hpp"
