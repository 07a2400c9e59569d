#pragma once

#include "graphgen/bigcount.hpp"
#include "graphgen/block_models.hpp"
#include "graphgen/combinat.hpp"
#include "graphgen/edgelist.hpp"
#include "graphgen/er.hpp"
#include "graphgen/graph_io.hpp"
#include "graphgen/kronecker.hpp"
#include "graphgen/matrix.hpp"
#include "graphgen/random.hpp"
#include "graphgen/stats.hpp"
