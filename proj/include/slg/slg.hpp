#pragma once

#include "slg/combinations.hpp"
#include "slg/edge_list_io.hpp"
#include "slg/edge_set.hpp"
#include "slg/errors.hpp"
#include "slg/graph.hpp"
#include "slg/grid_lc.hpp"
#include "slg/slicing_json.hpp"
#include "slg/superline.hpp"
