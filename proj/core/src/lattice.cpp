#include "gapcert/lattice.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace gapcert {

const char* region_name(Region r) {
  switch (r) {
    case Region::GL: return "GL";
    case Region::CN: return "CN";
    case Region::GR: return "GR";
    case Region::CENTER: return "CENTER";
    case Region::BULK: return "BULK";
  }
  return "?";
}

std::vector<int> DecoratedGraph::local_dims() const {
  std::vector<int> dims;
  dims.reserve(vertices.size());
  for (const auto& v : vertices) dims.push_back(v.two_s + 1);
  return dims;
}

Eigen::Index DecoratedGraph::hilbert_dim() const {
  Eigen::Index d = 1;
  for (const auto& v : vertices) d *= (v.two_s + 1);
  return d;
}

std::vector<int> DecoratedGraph::degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int DecoratedGraph::z_of_edge(int edge_index) const {
  const auto& [a, b] = edges[edge_index];
  auto intrinsic = [&](int id) {
    const int two_s = vertices[id].two_s;
    if (two_s == 3) return 3;
    if (two_s == 2) return 2;
    throw std::invalid_argument("z_of_edge: unsupported spin tag");
  };
  return intrinsic(a) + intrinsic(b);
}

DecoratedGraph build_y_graph(int n) {
  if (n < 1) throw std::invalid_argument("build_y_graph: n must be >= 1");
  DecoratedGraph g;
  g.vertices.push_back({0, 3, Region::CENTER});
  int next = 1;
  for (int leg = 0; leg < 3; ++leg) {
    int prev = 0;  // hub
    for (int m = 0; m < n; ++m) {
      g.vertices.push_back({next, 2, Region::BULK});
      g.edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return g;
}

DecoratedGraph build_g_graph(int n) {
  if (n < 1) throw std::invalid_argument("build_g_graph: n must be >= 1");
  DecoratedGraph g;
  int next = 0;

  // GL: legs a,b interleaved leaf-first, hub v last
  std::vector<int> leg_a(n), leg_b(n);
  for (int m = 0; m < n; ++m) {
    leg_a[m] = next;
    g.vertices.push_back({next++, 2, Region::GL});
    leg_b[m] = next;
    g.vertices.push_back({next++, 2, Region::GL});
  }
  const int hub_v = next;
  g.vertices.push_back({next++, 3, Region::GL});

  // CN: c_1 adjacent to v
  std::vector<int> chain(n);
  for (int m = 0; m < n; ++m) {
    chain[m] = next;
    g.vertices.push_back({next++, 2, Region::CN});
  }

  // GR: legs d,e interleaved hub-adjacent-first, hub w last
  std::vector<int> leg_d(n), leg_e(n);
  for (int m = 0; m < n; ++m) {
    leg_d[m] = next;
    g.vertices.push_back({next++, 2, Region::GR});
    leg_e[m] = next;
    g.vertices.push_back({next++, 2, Region::GR});
  }
  const int hub_w = next;
  g.vertices.push_back({next++, 3, Region::GR});

  for (int m = 0; m + 1 < n; ++m) {
    g.edges.emplace_back(leg_a[m], leg_a[m + 1]);
    g.edges.emplace_back(leg_b[m], leg_b[m + 1]);
  }
  g.edges.emplace_back(leg_a[n - 1], hub_v);
  g.edges.emplace_back(leg_b[n - 1], hub_v);
  g.edges.emplace_back(hub_v, chain[0]);
  for (int m = 0; m + 1 < n; ++m) g.edges.emplace_back(chain[m], chain[m + 1]);
  g.edges.emplace_back(chain[n - 1], hub_w);
  g.edges.emplace_back(hub_w, leg_d[0]);
  g.edges.emplace_back(hub_w, leg_e[0]);
  for (int m = 0; m + 1 < n; ++m) {
    g.edges.emplace_back(leg_d[m], leg_d[m + 1]);
    g.edges.emplace_back(leg_e[m], leg_e[m + 1]);
  }
  return g;
}

DecoratedGraph build_decorated_torus(int cells_x, int cells_y, int n) {
  if (cells_x < 1 || cells_y < 1)
    throw std::invalid_argument("build_decorated_torus: cell counts must be >= 1");
  if (n < 1) throw std::invalid_argument("build_decorated_torus: n must be >= 1");

  DecoratedGraph g;
  auto hub_a = [&](int x, int y) { return 2 * (y * cells_x + x); };
  auto hub_b = [&](int x, int y) { return 2 * (y * cells_x + x) + 1; };
  for (int i = 0; i < 2 * cells_x * cells_y; ++i) g.vertices.push_back({i, 3, Region::BULK});

  int next = 2 * cells_x * cells_y;
  auto decorate = [&](int u, int w) {
    int prev = u;
    for (int m = 0; m < n; ++m) {
      g.vertices.push_back({next, 2, Region::BULK});
      g.edges.emplace_back(prev, next);
      prev = next++;
    }
    g.edges.emplace_back(prev, w);
  };

  // two-site hexagonal unit cell, brick-wall coordinates
  for (int y = 0; y < cells_y; ++y)
    for (int x = 0; x < cells_x; ++x) {
      decorate(hub_a(x, y), hub_b(x, y));
      decorate(hub_a(x, y), hub_b((x + cells_x - 1) % cells_x, y));
      decorate(hub_a(x, y), hub_b(x, (y + cells_y - 1) % cells_y));
    }
  return g;
}

DecoratedGraph induced_subgraph(const DecoratedGraph& g, const std::vector<Region>& regions) {
  auto keep = [&](Region r) {
    for (Region q : regions)
      if (q == r) return true;
    return false;
  };
  DecoratedGraph out;
  std::map<int, int> remap;
  for (const auto& v : g.vertices) {
    if (!keep(v.region)) continue;
    int id = static_cast<int>(out.vertices.size());
    remap[v.id] = id;
    out.vertices.push_back({id, v.two_s, v.region});
  }
  for (const auto& [a, b] : g.edges) {
    auto ia = remap.find(a), ib = remap.find(b);
    if (ia != remap.end() && ib != remap.end())
      out.edges.emplace_back(ia->second, ib->second);
  }
  return out;
}

SparseHermitianOperator hamiltonian(const DecoratedGraph& g) {
  if (g.vertices.empty()) throw std::invalid_argument("hamiltonian: empty graph");
  const auto deg = g.degrees();
  for (const auto& v : g.vertices) {
    if (v.two_s == 3 && deg[v.id] != 3)
      throw std::invalid_argument("hamiltonian: spin-3/2 vertex without 3 edges");
    if (v.two_s == 2 && (deg[v.id] < 1 || deg[v.id] > 2))
      throw std::invalid_argument("hamiltonian: spin-1 vertex with invalid degree");
    if (v.two_s != 2 && v.two_s != 3)
      throw std::invalid_argument("hamiltonian: unsupported spin tag");
  }

  const std::vector<int> dims = g.local_dims();
  std::map<std::tuple<int, int, int>, Matrix> projector_cache;

  SparseHermitianOperator h;
  h.local_dims = dims;
  h.mat = SparseMatrix(g.hilbert_dim(), g.hilbert_dim());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& [a, b] = g.edges[e];
    const int z = g.z_of_edge(e);
    const auto key = std::make_tuple(g.vertices[a].two_s, g.vertices[b].two_s, z);
    auto it = projector_cache.find(key);
    if (it == projector_cache.end()) {
      it = projector_cache
               .emplace(key, total_spin_projector(g.vertices[a].two_s, g.vertices[b].two_s, z))
               .first;
    }
    h.mat += embed_two_site(it->second, a, b, dims).mat;
  }
  h.mat.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return std::abs(v) > 1e-15; });
  h.mat.makeCompressed();
  return h;
}

std::string graph_to_json(const DecoratedGraph& g) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << (i ? "," : "") << "{\"id\":" << v.id << ",\"two_s\":" << v.two_s
       << ",\"region\":\"" << region_name(v.region) << "\"}";
  }
  os << "],\"edges\":[";
  for (size_t i = 0; i < g.edges.size(); ++i)
    os << (i ? "," : "") << "[" << g.edges[i].first << "," << g.edges[i].second << "]";
  os << "]}";
  return os.str();
}

}  // namespace gapcert
