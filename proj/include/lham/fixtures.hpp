#pragma once

#include "lham/graph.hpp"

namespace lham::fixtures {

// Degree bound of each fixture defaults to its maximum degree unless given.

Graph path(int n, int degree_bound = 2);
Graph cycle(int n, int degree_bound = 2);
Graph complete(int n);
Graph petersen();
/// Spine 0..k-1 as a path, pendant k+i attached to spine vertex i. n = 2k.
Graph caterpillar(int k, int degree_bound = 3);
/// k four-cycles 4i..4i+3 in cycle order; 4i+2 joins 4(i+1 mod k). Connection
/// vertices are opposite, so 4i+1 and 4i+3 have degree 2. n = 4k.
Graph c4_ring(int k, int degree_bound = 3);
/// Two disjoint triangles {0,1,2}, {3,4,5}.
Graph two_triangles(int degree_bound = 3);

}  // namespace lham::fixtures
