#pragma once

// Umbrella header: the whole library.

#include "polyjoin/errors.hpp"
#include "polyjoin/ground_set.hpp"
#include "polyjoin/simplicial_complex.hpp"
#include "polyjoin/identities.hpp"
#include "polyjoin/set_model.hpp"
#include "polyjoin/ring.hpp"
#include "polyjoin/exact_matrix.hpp"
#include "polyjoin/sparse_linalg.hpp"
#include "polyjoin/chain_complex.hpp"
#include "polyjoin/staircase.hpp"
#include "polyjoin/induced_map.hpp"
#include "polyjoin/hochster.hpp"
#include "polyjoin/inclusion.hpp"
#include "polyjoin/product_duality.hpp"
#include "polyjoin/json_io.hpp"
#include "polyjoin/random_gen.hpp"
#include "polyjoin/verify_drivers.hpp"
