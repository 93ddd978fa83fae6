#pragma once

#include "listhom/brute_oracle.hpp"
#include "listhom/chain_ordering.hpp"
#include "listhom/colour_set.hpp"
#include "listhom/configuration.hpp"
#include "listhom/error.hpp"
#include "listhom/graph.hpp"
#include "listhom/instance_gen.hpp"
#include "listhom/io.hpp"
#include "listhom/representation.hpp"
#include "listhom/solver.hpp"
