#pragma once

// Umbrella header: exact-arithmetic encoding of Boolean function families as
// pairwise-orthogonal vectors, partition projectors, and single-query
// relational measurements, plus exact tensor-structure analysis.

#include "liftspace/boolean_function.hpp"
#include "liftspace/errors.hpp"
#include "liftspace/json_io.hpp"
#include "liftspace/lifting.hpp"
#include "liftspace/matrix.hpp"
#include "liftspace/multipartite.hpp"
#include "liftspace/partition.hpp"
#include "liftspace/predicate.hpp"
#include "liftspace/projector.hpp"
#include "liftspace/rational.hpp"
#include "liftspace/vector.hpp"
