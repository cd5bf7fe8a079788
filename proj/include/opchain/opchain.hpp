#pragma once

#include "opchain/adjacency.hpp"
#include "opchain/bigint.hpp"
#include "opchain/charpoly.hpp"
#include "opchain/counting.hpp"
#include "opchain/matrix.hpp"
#include "opchain/operator_set.hpp"
#include "opchain/polynomial.hpp"
#include "opchain/recurrence.hpp"
#include "opchain/table.hpp"
#include "opchain/verify.hpp"
