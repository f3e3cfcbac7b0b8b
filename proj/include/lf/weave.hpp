#pragma once

#include <array>
#include <string>
#include <vector>

#include "lf/braid.hpp"
#include "lf/plabic.hpp"

namespace lf {

// Level lines cut by one node per letter. String t runs from node t (1-based)
// to the next node on the same level, or to the right edge when there is none.
struct StringSeg {
  int level;
  int start;
  int end;  // 0 when half-open
  bool closed() const { return end > 0; }
};

struct StringDiagram {
  int n = 2;
  int length = 0;
  std::vector<StringSeg> strings;  // index t-1 for the string starting at node t

  std::vector<int> closed_indices() const;
  std::vector<int> frozen_indices() const;
  // Diagonals (slices) the string crosses: start .. end-1, or start .. length.
  int first_slice(int s) const { return strings[s].start; }
  int last_slice(int s) const { return strings[s].closed() ? strings[s].end - 1 : length; }
};

StringDiagram string_diagram(const BraidWord& beta);

// Signed intersection of two strings (see README for the rule).
int string_pairing(const StringSeg& a, const StringSeg& b);

struct WeaveVertex {
  enum Kind { Trivalent, Hexavalent, Tetravalent, BoundaryPoint };
  Kind kind;
  int block;  // 1-based, 0 for slice boundary points
  int color;  // generator index; for hexavalent the smaller of the two colors
  double x, y;
};

struct WeaveEdge {
  int a, b;
  int color;
};

struct BlockSpec {
  int level;
  std::vector<BraidMove> to_top;  // rewrites of the slice bringing s_level to the top
  int hexavalent = 0;
  int tetravalent = 0;
};

struct WeaveBlueprint {
  int n = 2;
  BraidWord beta;
  std::vector<int> slice;  // every slice word equals this reduced word of the half twist
  std::vector<BlockSpec> blocks;
  std::vector<WeaveVertex> vertices;
  std::vector<WeaveEdge> edges;
  StringDiagram strings;

  int trivalent_count() const;
  int hexavalent_count() const;
  int tetravalent_count() const;
  // Edges crossing the vertical line through slice j (0..length).
  int edges_across_slice(int j) const;
};

WeaveBlueprint compile_fence_weave(const PlabicFence& f);
WeaveBlueprint compile_fence_weave(const BraidWord& beta);

struct Cycle {
  enum Kind { LongI, Relative, Y };
  Kind kind = LongI;
  int level = 0;
  int from = 0, to = 0;      // LongI: blocks
  int string = -1;           // index into the string diagram
  int slice = 0, depth = 0;  // Relative
  std::array<int, 3> triple{};  // Y: slices whose flags the cycle encircles
  bool reversed = false;
};

struct CycleBasis {
  std::vector<Cycle> closed;
  std::vector<Cycle> relative;
};

CycleBasis cycle_basis(const WeaveBlueprint& w);

// Skew form on all strings.
std::vector<std::vector<int>> intersection_matrix(const WeaveBlueprint& w);

// <eta, gamma_c> for a relative cycle at slice `slice` and depth `depth`,
// summed over its per-sheet pieces, against the long cycle of closed string c.
int relative_pairing(const WeaveBlueprint& w, int slice, int depth, int c);
// Rows: all strings (eta at its leftmost slice); columns: closed strings.
std::vector<std::vector<int>> relative_pairing_matrix(const WeaveBlueprint& w);

struct DualityReport {
  bool identity = false;          // <eta_a, gamma_c> = delta on closed strings
  bool slice_independent = false; // same pairing at every slice a string crosses
  bool chain_identity = false;    // gamma_a = sum_c <a,c> eta_c against every gamma_d
  bool skew = false;
};
DualityReport duality_report(const WeaveBlueprint& w);

struct BoundaryWord {
  std::vector<int> word;  // cyclic: legs left to right, right slice top-down, left slice bottom-up
  bool matches = false;   // equals beta followed by two half twists
};
BoundaryWord boundary_word(const WeaveBlueprint& w);

struct Triangulation {
  int m = 3;
  std::vector<std::array<int, 3>> triangles;
};
void validate_triangulation(const Triangulation& t);
Triangulation fan_triangulation(int m);
Triangulation zigzag_triangulation(int m);

struct TriangulationWeave {
  int trivalent = 0;
  std::vector<std::pair<int, int>> edges;  // triangles sharing a diagonal
  int legs = 0;                            // polygon sides
  bool is_path() const;
};
TriangulationWeave triangulation_weave(const Triangulation& t);

std::string weave_json(const WeaveBlueprint& w);
std::string weave_svgdata(const WeaveBlueprint& w);
std::string weave_svg(const WeaveBlueprint& w);

}  // namespace lf
