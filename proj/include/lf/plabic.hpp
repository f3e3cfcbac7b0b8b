#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lf/braid.hpp"

namespace lf {

struct PlabicError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PlabicFence {
  struct Face {
    int level;
    int left;   // column, 0 when open to the left
    int right;  // column, 0 when open to the right
    bool closed() const { return left > 0 && right > 0; }
  };

  int n = 2;
  int length = 0;
  std::vector<std::vector<int>> levels;  // levels[i-1]: sorted columns on level i

  // Closed faces first (level-major, left to right), then the half-open ends.
  std::vector<Face> faces() const;
  int closed_face_count() const;
};

PlabicFence fence_from_braid(const BraidWord& beta);

enum class Color : std::uint8_t { Black, White, Boundary };

// Bicolored graph in a disk. Vertices 0..b-1 are the boundary points in
// clockwise order; rim edges 0..b-1 join boundary i to i+1 and close the disk.
// Dart 2e runs u -> v along edge e = (u, v), dart 2e+1 runs back.
// rot[v] lists the outgoing darts of v counterclockwise.
class PlabicGraph {
 public:
  struct Edge {
    int u = -1, v = -1;
    bool rim = false;
    bool alive = true;
  };

  // Edge of a drawing. The cyclic order at u uses the direction toward the
  // anchor (mx, my) when given, otherwise toward v.
  struct GeoEdge {
    int u, v;
    double mx = 0, my = 0;
    bool anchored = false;
  };

  // Drawing to rotation system. Boundary vertices come first, in clockwise
  // order, each with exactly one edge; the rim is added combinatorially.
  static PlabicGraph from_geometry(int boundary, const std::vector<Color>& colors,
                                   const std::vector<std::pair<double, double>>& xy,
                                   const std::vector<GeoEdge>& edges);

  int boundary_count() const { return boundary_; }
  int vertex_slots() const { return static_cast<int>(color_.size()); }
  bool alive(int v) const { return valive_[v]; }
  Color color(int v) const { return color_[v]; }
  int degree(int v) const;  // rim edges excluded
  std::vector<int> neighbors(int v) const;  // ccw, rim excluded
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int internal_vertex_count() const;
  int internal_edge_count() const;  // non-rim edges

  int tail(int d) const { return d & 1 ? edges_[d >> 1].v : edges_[d >> 1].u; }
  int head(int d) const { return d & 1 ? edges_[d >> 1].u : edges_[d >> 1].v; }
  bool rim_dart(int d) const { return edges_[d >> 1].rim; }

  // Faces as dart cycles with the face on the left; the region outside the
  // rim is omitted. Order is deterministic.
  std::vector<std::vector<int>> faces() const;
  bool touches_boundary(const std::vector<int>& face) const;

  // Bipartite on internal edges, boundary points of degree 1, Euler V - E + F = 2.
  void validate() const;

  // Mutating primitives.
  int add_vertex(Color c);
  void contract(int e);                    // endpoints merged into the first
  void remove_degree_two(int v);           // its two edges fused
  int insert_vertex(int e, Color c);       // subdivide edge e
  int split_off(int v, int d0, int d1);    // v keeps consecutive darts d0,d1; rest move to a new vertex
  void recolor(int v, Color c) { color_[v] = c; }
  void compact();

  bool operator==(const PlabicGraph&) const = default;

 private:
  int boundary_ = 0;
  std::vector<Color> color_;
  std::vector<bool> valive_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rot_;

  int position(int v, int d) const;
  void retail(int d, int from, int to);
};

// Alternating-strand routing: from boundary i, at a black vertex take the next
// edge clockwise, at a white vertex the next counterclockwise. Returns pi with
// 1-based entries, pi[i-1] = endpoint of the strand starting at i.
std::vector<int> strand_permutation(const PlabicGraph& g);

// Indices into g.faces() of square-move eligible faces.
std::vector<int> eligible_squares(const PlabicGraph& g);
// Exchanges the colors around a quadrilateral face (vertices of higher degree are
// split first) and returns the normal form. Throws PlabicError if ineligible.
PlabicGraph square_move(const PlabicGraph& g, int face);

PlabicGraph vertex_reduction(const PlabicGraph& g, int v);
PlabicGraph insert_degree_two(const PlabicGraph& g, int edge, Color c);

// Contract same-colored internal edges, remove degree-2 internal vertices
// (kept when they are the white vertex attached to a boundary point), and
// attach a white vertex to every boundary point that meets a black one.
PlabicGraph normal_form(PlabicGraph g);

// Canonical encoding with boundary labels fixed.
std::string canonical_code(const PlabicGraph& g);

std::vector<PlabicGraph> square_move_orbit(const PlabicGraph& g);
std::size_t plabic_orbit_count(const PlabicGraph& g);

struct FaceCycleReport {
  bool sum_zero = false;
  int faces = 0;
  int closed_faces = 0;
  int closed_rank = 0;
  bool independent() const { return closed_rank == closed_faces; }
};
FaceCycleReport face_cycle_relation(const PlabicGraph& g);

// Graph of the fence: n horizontal lines, one vertical edge per letter
// (white on the upper line, black on the lower), same-colored neighbours on a
// line separated by a degree-2 vertex; 2n boundary points at the line ends.
PlabicGraph fence_graph(const PlabicFence& f);

// k-subsets of [m] as bitmasks (bit i-1 for element i).
using Subset = std::uint32_t;
bool weakly_separated(Subset a, Subset b, int m);
std::vector<Subset> cyclic_intervals(int k, int m);
std::string subset_str(Subset s, int m);

struct WSCount {
  std::uint64_t count = 0;
  bool pure = true;
  int expected_size = 0;  // k(m-k)+1
  std::vector<std::vector<Subset>> collections;  // filled when requested
};
WSCount weakly_separated_count(int k, int m, bool keep = false);

// Reduced plabic graph dual to the plabic tiling of a maximal weakly separated
// collection; faces correspond to the members. Returned in normal form.
PlabicGraph plabic_from_collection(int k, int m, const std::vector<Subset>& collection);
// Collection of a fan triangulation of the m-gon (2-subsets).
std::vector<Subset> fan_collection(int m);
// Rectangle-seed collection for k-subsets of [m] (the Le-diagram seed).
std::vector<Subset> rectangle_collection(int k, int m);

std::string plabic_json(const PlabicGraph& g);
std::string fence_json(const PlabicFence& f);
std::string plabic_dot(const PlabicGraph& g);

}  // namespace lf
