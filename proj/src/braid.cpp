#include "lf/braid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <utility>

namespace lf {

std::string BraidWord::str() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(letters[i]);
  }
  return s;
}

void BraidWord::validate() const {
  if (n < 2) throw BraidParseError("strand count must be at least 2");
  for (int a : letters)
    if (a < 1 || a > n - 1)
      throw BraidParseError("generator s" + std::to_string(a) + " out of range for n=" + std::to_string(n));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  std::vector<int> word(bool nested) {
    std::vector<int> out;
    for (;;) {
      skip();
      if (p_ == t_.size()) {
        if (nested) fail("missing ')'");
        return out;
      }
      if (t_[p_] == ')') {
        if (!nested) fail("unbalanced ')'");
        return out;
      }
      auto part = atom();
      skip();
      if (p_ < t_.size() && t_[p_] == '^') {
        ++p_;
        skip();
        long k = number();
        if (k > 10000) fail("exponent too large");
        std::vector<int> rep;
        for (long i = 0; i < k; ++i) rep.insert(rep.end(), part.begin(), part.end());
        part = std::move(rep);
      }
      out.insert(out.end(), part.begin(), part.end());
      if (out.size() > 100000) fail("word too long");
    }
  }

 private:
  std::vector<int> atom() {
    char c = t_[p_];
    if (c == '(') {
      ++p_;
      auto w = word(true);
      ++p_;
      return w;
    }
    if (c == 's' || c == 'S') {
      ++p_;
      long i = number();
      if (i < 1) fail("generator index must be positive");
      return {static_cast<int>(i)};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  long number() {
    size_t s = p_;
    long v = 0;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) {
      v = v * 10 + (t_[p_] - '0');
      if (v > 1000000) fail("number too large");
      ++p_;
    }
    if (s == p_) fail("expected a number");
    return v;
  }

  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw BraidParseError("braid parse error at column " + std::to_string(p_ + 1) + ": " + what);
  }

  std::string_view t_;
  size_t p_ = 0;
};

}  // namespace

BraidWord parse_braid(std::string_view text, int n) {
  BraidWord b;
  b.letters = Parser(text).word(false);
  int top = 1;
  for (int a : b.letters) top = std::max(top, a + 1);
  b.n = n > 0 ? n : std::max(2, top);
  b.validate();
  return b;
}

std::vector<int> half_twist_word(int n) {
  std::vector<int> w;
  for (int g = 1; g < n; ++g)
    for (int a = g; a >= 1; --a) w.push_back(a);
  return w;
}

BraidWord half_twist(int n) { return BraidWord{n, half_twist_word(n)}; }

std::vector<int> strand_heights(int n, const std::vector<int>& word) {
  std::vector<int> u(n);
  for (int p = 0; p < n; ++p) u[p] = p;
  for (int a : word) std::swap(u[a - 1], u[a]);
  return u;
}

bool is_longest_reduced(int n, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != n * (n - 1) / 2) return false;
  auto u = strand_heights(n, word);
  for (int p = 0; p < n; ++p)
    if (u[p] != n - 1 - p) return false;
  return true;
}

std::vector<int> apply_move(std::vector<int> w, BraidMove mv) {
  int p = mv.pos;
  if (mv.kind == 'b') {
    int a = w[p], b = w[p + 1];
    w[p] = b;
    w[p + 1] = a;
    w[p + 2] = b;
  } else {
    std::swap(w[p], w[p + 1]);
  }
  return w;
}

std::vector<BraidMove> available_moves(const std::vector<int>& w) {
  std::vector<BraidMove> out;
  int l = static_cast<int>(w.size());
  for (int p = 0; p + 2 < l; ++p)
    if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) out.push_back({'b', p});
  for (int p = 0; p + 1 < l; ++p)
    if (std::abs(w[p] - w[p + 1]) >= 2) out.push_back({'c', p});
  return out;
}

int track_position(int pos, BraidMove mv) {
  int p = mv.pos;
  if (mv.kind == 'b') {
    if (pos == p) return p + 2;
    if (pos == p + 2) return p;
    return pos;
  }
  if (pos == p) return p + 1;
  if (pos == p + 1) return p;
  return pos;
}

std::vector<BraidMove> path_to_top(int n, int k) {
  auto r = half_twist_word(n);
  int start = -1;
  {
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i) h[i] = i + 1;
    for (int p = 0; p < static_cast<int>(r.size()); ++p) {
      int a = r[p];
      int s = h[a - 1], t = h[a];
      if (std::min(s, t) == k && std::max(s, t) == k + 1) start = p;
      std::swap(h[a - 1], h[a]);
    }
  }
  using State = std::pair<std::vector<int>, int>;
  std::map<State, std::pair<State, BraidMove>> prev;
  State s0{r, start};
  prev.emplace(s0, std::make_pair(s0, BraidMove{'x', -1}));
  std::deque<State> q{s0};
  while (!q.empty()) {
    State cur = q.front();
    q.pop_front();
    if (cur.second == 0) {
      std::vector<BraidMove> path;
      while (!(cur == s0)) {
        auto& [p, mv] = prev.at(cur);
        path.push_back(mv);
        cur = p;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto mv : available_moves(cur.first)) {
      State nx{apply_move(cur.first, mv), track_position(cur.second, mv)};
      if (prev.count(nx)) continue;
      prev.emplace(nx, std::make_pair(cur, mv));
      q.push_back(nx);
    }
  }
  throw std::logic_error("no move path to the top crossing");
}

}  // namespace lf
