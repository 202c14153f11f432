#pragma once

#include "egonet/distribution.hpp"
#include "egonet/ego_records.hpp"
#include "egonet/generators.hpp"
#include "egonet/graph.hpp"
#include "egonet/percolation.hpp"
#include "egonet/rng.hpp"
#include "egonet/solvers.hpp"
