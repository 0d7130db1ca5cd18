#pragma once

#include "perclab/closure.hpp"
#include "perclab/density.hpp"
#include "perclab/edgelist.hpp"
#include "perclab/experiments.hpp"
#include "perclab/gadgets.hpp"
#include "perclab/graph.hpp"
#include "perclab/maxflow.hpp"
#include "perclab/parallel.hpp"
#include "perclab/quotient_closure.hpp"
#include "perclab/random_graph.hpp"
#include "perclab/rational.hpp"
#include "perclab/subgraph_iso.hpp"
#include "perclab/witness.hpp"
