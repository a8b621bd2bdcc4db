#pragma once

#include "tdhom/algebra.hpp"
#include "tdhom/coalgebra.hpp"
#include "tdhom/cohomology.hpp"
#include "tdhom/conventions.hpp"
#include "tdhom/convolution.hpp"
#include "tdhom/dense_tensor.hpp"
#include "tdhom/lie_rinehart.hpp"
#include "tdhom/matrix.hpp"
#include "tdhom/multilinear_map.hpp"
#include "tdhom/permutation.hpp"
#include "tdhom/report.hpp"
#include "tdhom/structure_file.hpp"
#include "tdhom/td_structures.hpp"
