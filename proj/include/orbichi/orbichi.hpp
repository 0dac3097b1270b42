#ifndef ORBICHI_ORBICHI_HPP
#define ORBICHI_ORBICHI_HPP

#include "orbichi/caps.hpp"
#include "orbichi/config.hpp"
#include "orbichi/errors.hpp"
#include "orbichi/gamma_sets.hpp"
#include "orbichi/group.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/identities.hpp"
#include "orbichi/index_subgroups.hpp"
#include "orbichi/perm.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/rational.hpp"
#include "orbichi/sectors.hpp"
#include "orbichi/series.hpp"
#include "orbichi/wreath.hpp"

#endif
