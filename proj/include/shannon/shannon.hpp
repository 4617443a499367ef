#pragma once

#include "shannon/errors.hpp"
#include "shannon/exact_params.hpp"
#include "shannon/fractional.hpp"
#include "shannon/graph.hpp"
#include "shannon/graph6.hpp"
#include "shannon/haemers.hpp"
#include "shannon/preorder.hpp"
#include "shannon/prng.hpp"
#include "shannon/rational.hpp"
#include "shannon/simplex.hpp"
#include "shannon/spectrum.hpp"
#include "shannon/sym_matrix.hpp"
#include "shannon/theta.hpp"
#include "shannon/vertex_set.hpp"
