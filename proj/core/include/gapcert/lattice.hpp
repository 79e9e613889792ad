#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gapcert/spin.hpp"

namespace gapcert {

enum class Region { GL, CN, GR, CENTER, BULK };

const char* region_name(Region r);

struct GraphVertex {
  int id = 0;
  int two_s = 0;  // 3 for spin-3/2 hubs, 2 for spin-1 decoration sites
  Region region = Region::BULK;
};

/// Edge-decorated graph. Vertex ids are assigned deterministically and
/// double as tensor-factor positions (ascending id = row-major order).
struct DecoratedGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> local_dims() const;
  Eigen::Index hilbert_dim() const;
  std::vector<int> degrees() const;

  /// z(e): sum of the endpoint degrees in the ambient decorated lattice,
  /// inferred from the spin tags (spin-3/2 hubs have degree 3, spin-1
  /// sites degree 2). Subgraphs keep the projectors of the full lattice.
  int z_of_edge(int edge_index) const;
};

/// Y_v(n): one spin-3/2 hub of degree 3, three legs of n spin-1 sites.
/// Vertex order: hub, then each leg from hub outward.
DecoratedGraph build_y_graph(int n);

/// G(n) = G_L - C_n - G_R: two hubs joined by a shared decorated edge,
/// with two further legs per hub. Vertex order is region-contiguous:
/// GL = [a_1,b_1,...,a_n,b_n,v] (a_1,b_1 leaf ends, hub v last),
/// CN = [c_1..c_n] (c_1 adjacent to v), GR = [d_1,e_1,...,d_n,e_n,w]
/// (d_1,e_1 adjacent to the hub w).
DecoratedGraph build_g_graph(int n);

/// Periodic decorated honeycomb: 2*cells_x*cells_y spin-3/2 hubs of
/// degree 3, every edge subdivided into a path of n spin-1 sites.
DecoratedGraph build_decorated_torus(int cells_x, int cells_y, int n);

/// Induced subgraph on the vertices in the given regions, preserving
/// relative vertex order (so tensor factors stay region-contiguous).
DecoratedGraph induced_subgraph(const DecoratedGraph& g, const std::vector<Region>& regions);

/// H = sum over edges of the total-spin-z(e)/2 projector.
SparseHermitianOperator hamiltonian(const DecoratedGraph& g);

/// JSON document {vertices:[{id,two_s,region}], edges:[[a,b]]}.
std::string graph_to_json(const DecoratedGraph& g);

}  // namespace gapcert
