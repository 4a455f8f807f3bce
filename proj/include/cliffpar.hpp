#ifndef CLIFFPAR_HPP
#define CLIFFPAR_HPP

#include "cliffpar/errors.hpp"
#include "cliffpar/random.hpp"
#include "cliffpar/rational.hpp"
#include "cliffpar/quadratic_field.hpp"
#include "cliffpar/f2poly.hpp"
#include "cliffpar/f2ratfun.hpp"
#include "cliffpar/fields.hpp"
#include "cliffpar/linalg.hpp"
#include "cliffpar/quaternion.hpp"
#include "cliffpar/geometry.hpp"
#include "cliffpar/parallelisms.hpp"
#include "cliffpar/automorphisms.hpp"
#include "cliffpar/norm_search.hpp"
#include "cliffpar/parse.hpp"
#include "cliffpar/config.hpp"
#include "cliffpar/report.hpp"
#include "cliffpar/axioms.hpp"
#include "cliffpar/scenarios.hpp"
#include "cliffpar/query.hpp"

#endif
