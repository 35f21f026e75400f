#pragma once

#include "oddred/bimodular.hpp"
#include "oddred/complexity.hpp"
#include "oddred/errors.hpp"
#include "oddred/graph.hpp"
#include "oddred/labels.hpp"
#include "oddred/odd_cycle_facets.hpp"
#include "oddred/polyhedra.hpp"
#include "oddred/rational.hpp"
#include "oddred/solver.hpp"
#include "oddred/transfer.hpp"
