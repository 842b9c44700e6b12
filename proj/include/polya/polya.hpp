#pragma once

// Umbrella header.

#include "polya/cycle_index.hpp"
#include "polya/diagrams.hpp"
#include "polya/fqsym.hpp"
#include "polya/group.hpp"
#include "polya/json_io.hpp"
#include "polya/monomial.hpp"
#include "polya/partition.hpp"
#include "polya/permutation.hpp"
#include "polya/polya_enum.hpp"
#include "polya/powersum.hpp"
#include "polya/prime_signature.hpp"
#include "polya/rational.hpp"
#include "polya/ypoly.hpp"
