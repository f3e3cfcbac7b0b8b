#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lf/braid.hpp"
#include "lf/rational.hpp"
#include "lf/weave.hpp"

namespace lf {

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard: block [[z,-1],[1,0]]. Mirrored: [[z,1],[-1,0]].
enum class TauConvention { Standard, Mirrored };

Matrix tau(int n, int i, const Q& z, TauConvention conv = TauConvention::Standard);

// M_0 = Id, M_t = M_{t-1} tau_{i_t}(z_t).
struct FlagChain {
  int n = 2;
  std::vector<int> letters;
  std::vector<Q> z;
  std::vector<Matrix> M;
  TauConvention convention = TauConvention::Standard;
  std::uint64_t seed = 0;  // rng seed the sample was drawn with
  int attempts = 0;

  int length() const { return static_cast<int>(letters.size()); }
};

FlagChain make_chain(const BraidWord& beta, const std::vector<Q>& z, TauConvention conv = TauConvention::Standard);

enum class Genericity {
  Minors,     // every leading minor of every M_t is nonzero
  Transports  // additionally every merodromy and long-cycle transport is defined
};

// z_t uniform on {-9..-1, 1..9}; redrawn until generic, at most 64 draws.
FlagChain sample_conf(const BraidWord& beta, std::uint64_t seed, Genericity g = Genericity::Minors,
                      TauConvention conv = TauConvention::Standard);
bool is_generic(const FlagChain& c, Genericity g);

Q principal_minor(const Matrix& m, int i);

// A_a = Delta_{level}(M_j), checked equal over every diagonal j the string crosses.
std::vector<Q> initial_seed_values(const FlagChain& c, const StringDiagram& s);

// Decorated bases c_t (columns c_t[0..n-1]) carried along the chain; the flag
// of c_t is the flag of M_t, and each s_i-step is the compatible one.
std::vector<std::vector<Vec>> propagate_decorations(const FlagChain& c);
// prod_{r < depth} t_r, t_r the e_r-coefficient of dec[r] against dec[0..r-1], e_r, ..., e_{n-1}.
Q merodromy(const std::vector<Vec>& dec, int depth);
Q merodromy_transport(const FlagChain& c, int slice, int depth);
Q merodromy_transport(const FlagChain& c, const Cycle& eta);

// 2-dimensional wedges.
Q wedge2(const Vec& u, const Vec& v);
Q cross_ratio(const Vec& a, const Vec& b, const Vec& c, const Vec& d);

// Decorated flag in a 3-dimensional space: line spanned by `line`, plane line ^ second.
struct Flag3 {
  Vec line;
  Vec second;
};
Q wedge3(const Vec& a, const Vec& b, const Vec& c);
Q triple_ratio(const Flag3& a, const Flag3& b, const Flag3& c);
Flag3 chain_flag(const FlagChain& c, int t);

// Y-cycle around the flags of slices a < b < c, which must be pairwise
// transverse (n = 3 weaves; for (s1 s2)^3 the slices 0, 3, 6).
Cycle y_cycle(const WeaveBlueprint& w, int a, int b, int c);

// Monodromy by transport of a microstalk vector around the cycle.
Q cycle_monodromy(const FlagChain& c, const Cycle& gamma, const WeaveBlueprint& w);

// Points of an m-gon in a 2-dimensional space with a triangulation.
struct SquareMoveReport {
  int configs = 0;
  int checks = 0;
  int failures = 0;
  int degenerate = 0;  // m_F = -1
  std::string witness;
  bool ok() const { return failures == 0 && checks > 0; }
};

Q polygon_monodromy(const std::vector<Vec>& pts, const Triangulation& t, std::pair<int, int> diagonal);
// Orientation of diagonals d1, d2 sharing a triangle; 0 otherwise.
int polygon_pairing(const Triangulation& t, std::pair<int, int> d1, std::pair<int, int> d2);
std::vector<std::pair<int, int>> diagonals(const Triangulation& t);
Triangulation flip(const Triangulation& t, std::pair<int, int> diagonal);
// Flips `diagonal`, recomputes every monodromy from the points, and compares with
// m'_F = 1/m_F and m'_C = m_C m_F^{[-e]_+} (1 + m_F)^e, e = pairing(F, C).
void square_move_check(const std::vector<Vec>& pts, const Triangulation& t, std::pair<int, int> diagonal,
                       SquareMoveReport& rep);
SquareMoveReport square_move_trials(int configs, std::uint64_t seed, int m = 6);

std::string conf_json(const FlagChain& c);

}  // namespace lf
