#pragma once

#include "lpm/arrows.hpp"
#include "lpm/bruhat.hpp"
#include "lpm/diagram.hpp"
#include "lpm/error.hpp"
#include "lpm/flag.hpp"
#include "lpm/flag_diagram.hpp"
#include "lpm/lattice_path_matroid.hpp"
#include "lpm/lattice_point.hpp"
#include "lpm/parallel.hpp"
#include "lpm/permutation.hpp"
#include "lpm/poset.hpp"
#include "lpm/quotient.hpp"
#include "lpm/serialize.hpp"
#include "lpm/subset.hpp"
#include "lpm/text.hpp"
#include "lpm/verify.hpp"
