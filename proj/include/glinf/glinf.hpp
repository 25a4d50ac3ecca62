#pragma once

#include "glinf/rational.hpp"
#include "glinf/partition.hpp"
#include "glinf/sparse_poly.hpp"
#include "glinf/linalg.hpp"
#include "glinf/lr.hpp"
#include "glinf/polynomial_model.hpp"
#include "glinf/ghat.hpp"
#include "glinf/reciprocity.hpp"
