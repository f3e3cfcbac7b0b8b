#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lf {

struct BraidParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Positive braid word in s_1..s_{n-1}; letters are 1-based generator indices.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  // Space separated, e.g. "s1 s2 s1".
  std::string str() const;
  void validate() const;
  bool operator==(const BraidWord&) const = default;
};

// Grammar (see README):
//   word  := item*
//   item  := atom ('^' int)?
//   atom  := 's' int | '(' word ')'
// Whitespace between tokens is optional. n defaults to max letter + 1 (at least 2).
BraidWord parse_braid(std::string_view text, int n = 0);

// (s1)(s2 s1)(s3 s2 s1)...(s_{n-1} ... s1)
std::vector<int> half_twist_word(int n);
BraidWord half_twist(int n);

// Permutation of strand heights after reading `word` (u[p] = strand at height p, 0-based).
std::vector<int> strand_heights(int n, const std::vector<int>& word);
// Is `word` a reduced expression of the longest element?
bool is_longest_reduced(int n, const std::vector<int>& word);

// Local rewrites on a positive word: 'b' = s_i s_j s_i -> s_j s_i s_j at p..p+2,
// 'c' = commuting swap at p, p+1.
struct BraidMove {
  char kind;
  int pos;
  bool operator==(const BraidMove&) const = default;
};

std::vector<int> apply_move(std::vector<int> word, BraidMove mv);
std::vector<BraidMove> available_moves(const std::vector<int>& word);
// Where a tracked letter at position `pos` sits after the move.
int track_position(int pos, BraidMove mv);
// Shortest move sequence taking the half twist word to one that starts with
// the crossing of strands k, k+1 (that crossing then reads s_k).
std::vector<BraidMove> path_to_top(int n, int k);

}  // namespace lf
