#pragma once

#include "bglink/graph.hpp"
#include "bglink/braid.hpp"
#include "bglink/exact.hpp"
#include "bglink/invariants.hpp"
#include "bglink/adjacency.hpp"
#include "bglink/json_io.hpp"
#include "bglink/catalog.hpp"
