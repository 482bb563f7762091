#pragma once

// Exact computational algebra around the ring Z[2^(1/n)] and the group of
// bounded sequences over it: ring arithmetic with decidable real-embedding
// comparisons, Pell-type small elements, a calculus of additive-group
// homomorphisms with blowup witnesses, composable direct-sum isomorphism
// witnesses, and an integer Smith normal form engine with the rank-parity
// obstruction.

#include "zroot2/types.hpp"
#include "zroot2/interval.hpp"
#include "zroot2/matrix.hpp"
#include "zroot2/ring.hpp"
#include "zroot2/rng.hpp"
#include "zroot2/seqgroup.hpp"
#include "zroot2/small_elements.hpp"
#include "zroot2/hom.hpp"
#include "zroot2/witness.hpp"
#include "zroot2/snf.hpp"
#include "zroot2/json_io.hpp"
#include "zroot2/checks.hpp"
#include "zroot2/report.hpp"
