#pragma once

#include "gz/algebra.hpp"
#include "gz/charpoly.hpp"
#include "gz/eigen.hpp"
#include "gz/error.hpp"
#include "gz/expm.hpp"
#include "gz/fiber_target.hpp"
#include "gz/flows.hpp"
#include "gz/invariants.hpp"
#include "gz/linsolve.hpp"
#include "gz/matrix.hpp"
#include "gz/moment.hpp"
#include "gz/nilfibre.hpp"
#include "gz/pfaffian.hpp"
#include "gz/poisson.hpp"
#include "gz/rank.hpp"
#include "gz/regularity.hpp"
#include "gz/sampling.hpp"
#include "gz/solvar_gl.hpp"
#include "gz/solvar_so.hpp"
