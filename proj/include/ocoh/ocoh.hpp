#pragma once

#include "ocoh/algebra.hpp"
#include "ocoh/cohomology.hpp"
#include "ocoh/deformation.hpp"
#include "ocoh/dendriform.hpp"
#include "ocoh/io.hpp"
#include "ocoh/linfty.hpp"
#include "ocoh/matrix.hpp"
#include "ocoh/mixed_map.hpp"
#include "ocoh/mmap.hpp"
#include "ocoh/operators.hpp"
#include "ocoh/rational.hpp"
