#pragma once

#include "hypertour/combinatorics.hpp"
#include "hypertour/connectivity.hpp"
#include "hypertour/covers.hpp"
#include "hypertour/degenerate.hpp"
#include "hypertour/error.hpp"
#include "hypertour/experiment.hpp"
#include "hypertour/hamiltonian.hpp"
#include "hypertour/hypercore.hpp"
#include "hypertour/io.hpp"
#include "hypertour/lemmas.hpp"
#include "hypertour/matching.hpp"
#include "hypertour/pancyclic.hpp"
#include "hypertour/random.hpp"
#include "hypertour/search.hpp"
