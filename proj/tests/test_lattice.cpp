#include <doctest.h>

#include <json.hpp>

#include "gapcert/lattice.hpp"

using namespace gapcert;

TEST_CASE("Y-graph shape and interaction labels") {
  const DecoratedGraph y1 = build_y_graph(1);
  CHECK(y1.vertices.size() == 4);
  CHECK(y1.edges.size() == 3);
  CHECK(y1.hilbert_dim() == 108);
  for (int e = 0; e < 3; ++e) CHECK(y1.z_of_edge(e) == 5);
  CHECK(y1.degrees()[0] == 3);

  const DecoratedGraph y2 = build_y_graph(2);
  CHECK(y2.vertices.size() == 7);
  CHECK(y2.edges.size() == 6);
  int z5 = 0, z4 = 0;
  for (int e = 0; e < 6; ++e) {
    const int z = y2.z_of_edge(e);
    if (z == 5) ++z5;
    if (z == 4) ++z4;
  }
  CHECK(z5 == 3);
  CHECK(z4 == 3);
}

TEST_CASE("H-shaped graph regions and connectivity") {
  const DecoratedGraph g = build_g_graph(2);
  CHECK(g.vertices.size() == 12);
  int gl = 0, cn = 0, gr = 0;
  for (const auto& v : g.vertices) {
    if (v.region == Region::GL) ++gl;
    if (v.region == Region::CN) ++cn;
    if (v.region == Region::GR) ++gr;
  }
  CHECK(gl == 5);
  CHECK(cn == 2);
  CHECK(gr == 5);

  const auto deg = g.degrees();
  for (const auto& v : g.vertices)
    if (v.two_s == 3) CHECK(deg[v.id] == 3);

  const DecoratedGraph left = induced_subgraph(g, {Region::GL, Region::CN});
  CHECK(left.vertices.size() == 7);
  CHECK(left.edges.size() == 6);
  // relabeled ids stay dense and ordered
  for (size_t i = 0; i < left.vertices.size(); ++i)
    CHECK(left.vertices[i].id == static_cast<int>(i));
}

TEST_CASE("decorated torus is 3-regular on hubs") {
  const DecoratedGraph t = build_decorated_torus(2, 2, 1);
  CHECK(t.vertices.size() == 20);  // 8 hubs + 12 decorations
  const auto deg = t.degrees();
  for (const auto& v : t.vertices) {
    if (v.two_s == 3) CHECK(deg[v.id] == 3);
    if (v.two_s == 2) CHECK(deg[v.id] == 2);
  }
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) CHECK(t.z_of_edge(e) == 5);

  CHECK(build_decorated_torus(1, 1, 1).hilbert_dim() == 432);
}

TEST_CASE("hamiltonian is hermitian and positive semidefinite") {
  const SparseHermitianOperator h = hamiltonian(build_y_graph(1));
  CHECK(h.dim() == 108);
  CHECK(h.is_hermitian());
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(h.mat));
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("hamiltonian rejects degree-inconsistent spin tags") {
  DecoratedGraph bad;
  bad.vertices.push_back({0, 3, Region::BULK});
  bad.vertices.push_back({1, 2, Region::BULK});
  bad.edges.emplace_back(0, 1);  // spin-3/2 hub with a single edge
  CHECK_THROWS_AS(hamiltonian(bad), std::invalid_argument);
}

TEST_CASE("graph json serialization parses back") {
  const DecoratedGraph y = build_y_graph(1);
  const auto doc = nlohmann::json::parse(graph_to_json(y));
  CHECK(doc["vertices"].size() == 4);
  CHECK(doc["edges"].size() == 3);
  CHECK(doc["vertices"][0]["two_s"] == 3);
  CHECK(doc["vertices"][0]["region"] == "CENTER");
  CHECK(doc["edges"][0][0] == 0);
}
