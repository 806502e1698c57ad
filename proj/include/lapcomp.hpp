#pragma once

#include "lapcomp/bigint.hpp"
#include "lapcomp/config.hpp"
#include "lapcomp/cone.hpp"
#include "lapcomp/conjecture.hpp"
#include "lapcomp/cycle.hpp"
#include "lapcomp/ehrhart.hpp"
#include "lapcomp/errors.hpp"
#include "lapcomp/graph.hpp"
#include "lapcomp/json_io.hpp"
#include "lapcomp/lattice_enum.hpp"
#include "lapcomp/matrix.hpp"
#include "lapcomp/polynomial.hpp"
#include "lapcomp/tree.hpp"
