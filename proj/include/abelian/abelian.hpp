#pragma once

// Umbrella header: exact integer linear algebra (Smith Normal Form), finite
// abelian groups and their subgroup lattices, homomorphism spans, pushout
// amalgams, and the two base-membership deciders.

#include "abelian/amalgam.hpp"
#include "abelian/decide.hpp"
#include "abelian/errors.hpp"
#include "abelian/group.hpp"
#include "abelian/hom.hpp"
#include "abelian/json_io.hpp"
#include "abelian/matrix.hpp"
#include "abelian/numeric.hpp"
#include "abelian/parse.hpp"
#include "abelian/snf.hpp"
#include "abelian/subgroup.hpp"
