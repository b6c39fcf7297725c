#pragma once

#include "locdom/vertex_set.hpp"
#include "locdom/graph.hpp"
#include "locdom/ld_sets.hpp"
#include "locdom/associated_graph.hpp"
#include "locdom/bipartite_analysis.hpp"
#include "locdom/families.hpp"
#include "locdom/enumeration.hpp"
#include "locdom/io.hpp"
#include "locdom/verify.hpp"
