#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

bool is_prime(long long n);

// The one-vertex genus-g map with edge-midpoint white vertices: 4g edges in
// black rotation a1 b1 a1' b1' ... ag bg ag' bg', white vertices pairing
// (ai ai') and (bi bi'). Edge 4i is ai, 4i+1 bi, 4i+2 ai', 4i+3 bi'.
Dessin one_vertex_clean(int gamma);

enum class Colour { Black, White };

// Attaches a new leaf of colour `leaf` (edge index n) to the vertex of the
// opposite colour that contains `host`. The new edge is placed in that
// vertex's rotation right after the edge `position` steps beyond `host`,
// so position 0 uses the corner following `host`.
Dessin add_pendant(const Dessin &d, int host, Colour leaf, int position = 0);

// Repeats add_pendant(host, leaf, 0) until the edge count is prime.
Dessin pad_to_prime(const Dessin &d, int host, Colour leaf);

// Vertex/edge/face counts of a map given in clean form (sigma1 a
// fixed-point-free involution pairing the two halves of each map edge).
struct MapCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;

  bool operator==(const MapCounts &) const = default;
};

bool is_clean(const Dessin &d);

// Throws Errc::InvalidArgument if `d` is not clean.
MapCounts map_counts(const Dessin &map);

bool is_triangulation(const Dessin &map);

// Flag subdivision of a clean map: V' = V+E+F, E' = 6E, F' = 4E, every face a
// triangle, genus preserved.
Dessin barycentric_subdivide(const Dessin &map);

// Boundary of the tetrahedron as a clean map (4 vertices, 6 edges).
Dessin tetrahedron();

enum class Strategy { Bouquet, Triangulation };

std::optional<Strategy> parse_strategy(const std::string &name);
const char *strategy_name(Strategy s) noexcept;

struct SubdivisionStep {
  MapCounts before;
  MapCounts after;
  int genus_before = 0;
  int genus_after = 0;
};

struct Lemma1Result {
  Dessin dessin;
  // One edge per distinct white vertex; at least r of them.
  std::vector<int> whites;
  // Triangulation strategy only.
  std::vector<SubdivisionStep> subdivisions;
};

// Non-uniform dessin of genus `gamma` with a prime number of edges and at
// least `r` white vertices.
Lemma1Result lemma1(int gamma, int r, Strategy strategy = Strategy::Bouquet);

struct HandleEdges {
  int a = -1, b = -1, a_prime = -1, b_prime = -1;
};

// Bouquet base for the covering construction. Black rotation at the centre:
// the handle loops, then the marked pendant whites, then padding pendant
// whites. For gamma = 0 a black leaf hangs off the first padding white.
struct MarkedBase {
  Dessin d;
  int gamma = 0;
  std::vector<HandleEdges> handles;
  std::vector<int> marked;  // edge of the pendant white over each cone point
  std::vector<int> padding; // padding pendant whites
  int black_leaf = -1;      // gamma = 0 only
  int closing_edge = -1;    // last edge of the centre rotation
};

MarkedBase marked_base(int gamma, int r);

} // namespace dessins
