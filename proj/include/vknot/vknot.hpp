#pragma once

#include "vknot/core.hpp"
#include "vknot/diagram.hpp"
#include "vknot/fuzz.hpp"
#include "vknot/graph.hpp"
#include "vknot/invariants.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"
#include "vknot/omega.hpp"
#include "vknot/realize.hpp"
#include "vknot/reidemeister3.hpp"
#include "vknot/search.hpp"
#include "vknot/trace.hpp"
