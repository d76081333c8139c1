#include "stralg/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "stralg/core.hpp"

namespace stralg {

int letter_source(const Quiver& q, const Letter& l) {
  return l.direct ? q.arrows[l.arrow].src : q.arrows[l.arrow].dst;
}

int letter_target(const Quiver& q, const Letter& l) {
  return l.direct ? q.arrows[l.arrow].dst : q.arrows[l.arrow].src;
}

int word_target(const Quiver& q, const Word& w) {
  return w.trivial() ? w.base : letter_target(q, w.letters.back());
}

Word inverse_word(const Quiver& q, const Word& w) {
  Word out;
  out.base = word_target(q, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->arrow, !it->direct});
  return out;
}

Word rotate_word(const Quiver& q, const Word& w, int k) {
  if (w.trivial()) return w;
  Word out = w;
  int n = w.length();
  k = ((k % n) + n) % n;
  std::rotate(out.letters.begin(), out.letters.begin() + k, out.letters.end());
  out.base = letter_source(q, out.letters[0]);
  return out;
}

std::string format_word(const Quiver& q, const Word& w) {
  if (w.trivial()) return "e_" + q.vertices[w.base];
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '.';
    s += q.arrows[w.letters[i].arrow].name;
    if (!w.letters[i].direct) s += "^-1";
  }
  return s;
}

Word parse_word(const Quiver& q, const std::string& text) {
  Word w;
  if (text.rfind("e_", 0) == 0) {
    int v = q.vertex_index(text.substr(2));
    if (v < 0) throw Error("unknown vertex in word '" + text + "'");
    w.base = v;
    return w;
  }
  size_t start = 0;
  while (start <= text.size()) {
    size_t dot = text.find('.', start);
    std::string tok = text.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    bool direct = true;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      direct = false;
      tok = tok.substr(0, tok.size() - 3);
    }
    int a = q.arrow_index(tok);
    if (a < 0) throw Error("unknown arrow '" + tok + "' in word");
    w.letters.push_back({a, direct});
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (w.letters.empty()) throw Error("empty word");
  w.base = letter_source(q, w.letters[0]);
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (letter_target(q, w.letters[i]) != letter_source(q, w.letters[i + 1]))
      throw Error("word letters do not compose: " + text);
  return w;
}

// Letter order for canonical forms: direct before inverse, then arrow name.
static bool letter_less(const Quiver& q, const Letter& a, const Letter& b) {
  if (a.direct != b.direct) return a.direct;
  return q.arrows[a.arrow].name < q.arrows[b.arrow].name;
}

bool word_less(const Quiver& q, const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial()) return a.base < b.base;
  for (int i = 0; i < a.length(); ++i) {
    if (a.letters[i] == b.letters[i]) continue;
    return letter_less(q, a.letters[i], b.letters[i]);
  }
  return false;
}

Word canonical_string(const Quiver& q, const Word& w) {
  Word inv = inverse_word(q, w);
  return word_less(q, inv, w) ? inv : w;
}

Word canonical_band(const Quiver& q, const Word& w) {
  if (w.trivial()) return w;
  Word best = w;
  for (const Word& seed : {w, inverse_word(q, w)}) {
    for (int k = 0; k < seed.length(); ++k) {
      Word rot = seed;
      std::rotate(rot.letters.begin(), rot.letters.begin() + k,
                  rot.letters.end());
      rot.base = letter_source(q, rot.letters[0]);
      if (word_less(q, rot, best)) best = rot;
    }
  }
  return best;
}

namespace {

// Arrow sequences of the monomial generators, forward and reversed.
struct GeneratorPatterns {
  std::vector<std::vector<int>> fwd;
  std::vector<std::vector<int>> rev;

  explicit GeneratorPatterns(const Presentation& pres) {
    for (const auto& r : pres.relations) {
      if (!r.monomial()) continue;
      fwd.push_back(r.terms[0].path.arrows);
      auto v = r.terms[0].path.arrows;
      std::reverse(v.begin(), v.end());
      rev.push_back(std::move(v));
    }
  }

  const std::vector<std::vector<int>>& side(bool direct) const {
    return direct ? fwd : rev;
  }
};

bool ends_with(const std::vector<int>& seq, const std::vector<int>& suffix) {
  if (suffix.size() > seq.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), seq.rbegin());
}

// Append `arrow` to the run buffer. Returns false when a generator
// completes; otherwise stores the longest suffix that is a proper prefix of
// some pattern.
bool advance_buffer(const GeneratorPatterns& pats, bool direct,
                    std::vector<int>& buf, int arrow) {
  buf.push_back(arrow);
  const auto& pat = pats.side(direct);
  for (const auto& g : pat)
    if (ends_with(buf, g)) return false;
  for (int keep = std::min((int)buf.size(), 64); keep >= 0; --keep) {
    std::vector<int> suf(buf.end() - keep, buf.end());
    bool is_proper_prefix = false;
    for (const auto& g : pat)
      if (suf.size() < g.size() &&
          std::equal(suf.begin(), suf.end(), g.begin())) {
        is_proper_prefix = true;
        break;
      }
    if (keep == 0 || is_proper_prefix) {
      buf = std::move(suf);
      return true;
    }
  }
  buf.clear();
  return true;
}

}  // namespace

bool is_string_word(const Presentation& pres, const Word& w, std::string* why) {
  const Quiver& q = pres.quiver;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.trivial()) {
    if (w.base < 0 || w.base >= (int)q.vertices.size())
      return fail("trivial word at unknown vertex");
    return true;
  }
  if (w.base != letter_source(q, w.letters[0]))
    return fail("word base does not match first letter");
  for (int i = 0; i + 1 < w.length(); ++i) {
    if (letter_target(q, w.letters[i]) != letter_source(q, w.letters[i + 1]))
      return fail("letters " + std::to_string(i) + "," + std::to_string(i + 1) +
                  " do not compose");
    if (w.letters[i].arrow == w.letters[i + 1].arrow &&
        w.letters[i].direct != w.letters[i + 1].direct)
      return fail("word is not reduced at position " + std::to_string(i));
  }
  // maximal unidirectional runs must avoid the ideal
  GeneratorPatterns pats(pres);
  int i = 0;
  while (i < w.length()) {
    int j = i;
    while (j < w.length() && w.letters[j].direct == w.letters[i].direct) ++j;
    std::vector<int> run;
    for (int t = i; t < j; ++t) run.push_back(w.letters[t].arrow);
    if (!w.letters[i].direct) std::reverse(run.begin(), run.end());
    Path p = make_path(q, run);
    if (pres.path_is_zero(p))
      return fail("run " + format_path(q, p) + " lies in the ideal");
    i = j;
  }
  return true;
}

StringAutomaton::StringAutomaton(const Presentation& pres) : pres_(&pres) {
  GeneratorPatterns pats(pres);
  const Quiver& q = pres.quiver;

  auto intern = [&](const Letter& l, std::vector<int> buf) {
    auto key = std::make_pair(std::make_pair(l.arrow, l.direct), buf);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = (int)letters_.size();
    letters_.push_back(l);
    buffers_.push_back(std::move(buf));
    edges_.emplace_back();
    index_[key] = id;
    return id;
  };

  // seed one state per letter
  std::deque<int> todo;
  for (int a = 0; a < (int)q.arrows.size(); ++a)
    for (bool dir : {true, false}) {
      std::vector<int> buf;
      if (!advance_buffer(pats, dir, buf, a)) continue;  // cannot happen
      int id = intern({a, dir}, std::move(buf));
      if (std::find(initial_.begin(), initial_.end(), id) == initial_.end()) {
        initial_.push_back(id);
        todo.push_back(id);
      }
    }

  std::set<int> expanded;
  while (!todo.empty()) {
    int s = todo.front();
    todo.pop_front();
    if (!expanded.insert(s).second) continue;
    Letter last = letters_[s];
    int at = letter_target(q, last);
    for (int a = 0; a < (int)q.arrows.size(); ++a)
      for (bool dir : {true, false}) {
        Letter next{a, dir};
        if (letter_source(q, next) != at) continue;
        if (a == last.arrow && dir != last.direct) continue;  // reduced
        std::vector<int> buf = dir == last.direct ? buffers_[s] : std::vector<int>{};
        if (!advance_buffer(pats, dir, buf, a)) continue;
        int t = intern(next, std::move(buf));
        edges_[s].push_back({next, t});
        if (!expanded.count(t)) todo.push_back(t);
      }
  }
}

int StringAutomaton::initial_state(const Letter& l) const {
  GeneratorPatterns pats(*pres_);
  std::vector<int> buf;
  if (!advance_buffer(pats, l.direct, buf, l.arrow)) return -1;
  auto key = std::make_pair(std::make_pair(l.arrow, l.direct), buf);
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int StringAutomaton::step(int state, const Letter& next) const {
  for (const auto& [l, t] : edges_[state])
    if (l == next) return t;
  return -1;
}

bool StringAutomaton::accepts(const Word& w) const {
  const Quiver& q = pres_->quiver;
  if (w.trivial())
    return w.base >= 0 && w.base < (int)q.vertices.size();
  if (w.base != letter_source(q, w.letters[0])) return false;
  int s = initial_state(w.letters[0]);
  for (size_t i = 1; s >= 0 && i < w.letters.size(); ++i)
    s = step(s, w.letters[i]);
  return s >= 0;
}

bool StringAutomaton::has_cycle() const {
  std::vector<int> color(letters_.size(), 0);
  bool cyc = false;
  std::function<void(int)> visit = [&](int u) {
    color[u] = 1;
    for (const auto& [l, w] : edges_[u]) {
      (void)l;
      if (color[w] == 1) cyc = true;
      if (color[w] == 0 && !cyc) visit(w);
    }
    color[u] = 2;
  };
  for (size_t i = 0; i < letters_.size() && !cyc; ++i)
    if (color[i] == 0) visit((int)i);
  return cyc;
}

namespace {

// Tarjan SCCs of an edge list graph.
std::vector<std::vector<int>> scc_components(
    const std::vector<std::vector<std::pair<Letter, int>>>& edges) {
  int n = (int)edges.size();
  std::vector<int> idx(n, -1), low(n, 0), stackpos(n, 0);
  std::vector<bool> onstack(n, false);
  std::vector<int> stk;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> strong = [&](int u) {
    idx[u] = low[u] = counter++;
    stk.push_back(u);
    onstack[u] = true;
    for (const auto& [l, w] : edges[u]) {
      (void)l;
      if (idx[w] < 0) {
        strong(w);
        low[u] = std::min(low[u], low[w]);
      } else if (onstack[w]) {
        low[u] = std::min(low[u], idx[w]);
      }
    }
    if (low[u] == idx[u]) {
      std::vector<int> comp;
      while (true) {
        int w = stk.back();
        stk.pop_back();
        onstack[w] = false;
        comp.push_back(w);
        if (w == u) break;
      }
      comps.push_back(std::move(comp));
    }
  };
  for (int u = 0; u < n; ++u)
    if (idx[u] < 0) strong(u);
  return comps;
}

}  // namespace

std::optional<Word> StringAutomaton::cycle_witness() const {
  auto comps = scc_components(edges_);
  auto cyclic = [&](const std::vector<int>& comp) {
    if (comp.size() > 1) return true;
    for (const auto& [l, w] : edges_[comp[0]]) {
      (void)l;
      if (w == comp[0]) return true;
    }
    return false;
  };
  // prefer an SCC containing both directions
  const std::vector<int>* best = nullptr;
  for (const auto& comp : comps) {
    if (!cyclic(comp)) continue;
    bool dir = false, inv = false;
    for (int s : comp) (letters_[s].direct ? dir : inv) = true;
    if (dir && inv) {
      best = &comp;
      break;
    }
    if (!best) best = &comp;
  }
  if (!best) return std::nullopt;

  std::set<int> inside(best->begin(), best->end());
  int u = (*best)[0];
  int v = u;
  for (int s : *best)
    if (letters_[s].direct != letters_[u].direct) v = s;

  // Shortest nonempty letter sequence from -> to within the SCC (seeded from
  // the out-edges of `from`, so from == to yields a nonempty loop).
  auto walk_between = [&](int from, int to) {
    std::map<int, std::pair<int, Letter>> parent;
    std::deque<int> queue;
    for (const auto& [l, w] : edges_[from])
      if (inside.count(w) && !parent.count(w)) {
        parent[w] = {from, l};
        queue.push_back(w);
      }
    std::set<int> expanded;
    while (!queue.empty() && !parent.count(to)) {
      int x = queue.front();
      queue.pop_front();
      if (!expanded.insert(x).second) continue;
      for (const auto& [l, w] : edges_[x])
        if (inside.count(w) && !parent.count(w)) {
          parent[w] = {x, l};
          queue.push_back(w);
        }
    }
    std::vector<Letter> seq;
    if (!parent.count(to)) return seq;
    int cur = to;
    do {
      auto [p, l] = parent.at(cur);
      seq.push_back(l);
      cur = p;
    } while (cur != from);
    std::reverse(seq.begin(), seq.end());
    return seq;
  };

  std::vector<Letter> walk = walk_between(u, v);
  if (v != u) {
    auto back = walk_between(v, u);
    if (back.empty()) return std::nullopt;  // defensive
    walk.insert(walk.end(), back.begin(), back.end());
  }
  if (walk.empty()) return std::nullopt;  // defensive

  Word w;
  w.letters = walk;
  // primitive root
  int n = w.length();
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool period = true;
    for (int i = 0; i + d < n && period; ++i)
      if (!(w.letters[i] == w.letters[i + d])) period = false;
    if (period) {
      w.letters.resize(d);
      break;
    }
  }
  w.base = letter_source(pres_->quiver, w.letters[0]);
  return canonical_band(pres_->quiver, w);
}

int StringAutomaton::longest_word() const {
  if (has_cycle()) throw Error("longest_word on a cyclic automaton");
  // longest chain of states (each state = one letter)
  std::vector<int> memo(letters_.size(), -1);
  std::function<int(int)> depth = [&](int u) {
    if (memo[u] >= 0) return memo[u];
    int best = 1;
    for (const auto& [l, w] : edges_[u]) {
      (void)l;
      best = std::max(best, 1 + depth(w));
    }
    return memo[u] = best;
  };
  int best = 0;
  for (int s : initial_) best = std::max(best, depth(s));
  return best;
}

std::vector<Word> enumerate_strings(const Presentation& pres, int max_len) {
  const Quiver& q = pres.quiver;
  StringAutomaton aut(pres);
  std::vector<Word> out;
  std::set<std::pair<int, std::vector<std::pair<int, bool>>>> seen;
  auto push = [&](const Word& w) {
    Word c = canonical_string(q, w);
    std::vector<std::pair<int, bool>> key;
    for (const auto& l : c.letters) key.push_back({l.arrow, l.direct});
    if (seen.insert({c.trivial() ? c.base : -1, key}).second) out.push_back(c);
  };
  for (int v = 0; v < (int)q.vertices.size(); ++v) {
    Word w;
    w.base = v;
    push(w);
  }
  // BFS over words, acceptance decided by the automaton
  std::deque<Word> todo;
  if (max_len >= 1)
    for (int a = 0; a < (int)q.arrows.size(); ++a)
      for (bool dir : {true, false}) {
        Letter l{a, dir};
        Word w;
        w.base = letter_source(q, l);
        w.letters = {l};
        push(w);
        todo.push_back(w);
      }
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop_front();
    if (cur.length() >= max_len) continue;
    int at = word_target(q, cur);
    for (int a = 0; a < (int)q.arrows.size(); ++a)
      for (bool dir : {true, false}) {
        Letter l{a, dir};
        if (letter_source(q, l) != at) continue;
        Word ext = cur;
        ext.letters.push_back(l);
        if (!aut.accepts(ext)) continue;
        push(ext);
        todo.push_back(ext);
      }
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return word_less(q, a, b); });
  return out;
}

std::vector<Word> enumerate_all_strings(const Presentation& pres) {
  StringAutomaton aut(pres);
  if (aut.has_cycle())
    throw Error("string census requested on a representation-infinite algebra");
  return enumerate_strings(pres, aut.longest_word());
}

Mat path_action(const Quiver& q, const Representation& rep, const Path& p) {
  (void)q;
  if (p.trivial()) return identity_matrix(rep.dims[p.base]);
  Mat m = rep.matrices[p.arrows[0]];
  for (size_t i = 1; i < p.arrows.size(); ++i)
    m = mat_mul(rep.matrices[p.arrows[i]], m);
  return m;
}

bool representation_satisfies(const Presentation& pres, const Representation& rep) {
  for (const auto& r : pres.relations) {
    if (r.monomial()) {
      if (!mat_is_zero(path_action(pres.quiver, rep, r.terms[0].path)))
        return false;
    } else {
      Mat a = path_action(pres.quiver, rep, r.terms[0].path);
      Mat b = path_action(pres.quiver, rep, r.terms[1].path);
      if (r.terms[0].coeff == r.terms[1].coeff)
        return false;  // not of (1,-1) shape; unreachable on valid input
      if (!mat_equal(a, b)) return false;
    }
  }
  return true;
}

Representation string_module(const Presentation& pres, const Word& w) {
  std::string why;
  if (!is_string_word(pres, w, &why))
    throw Error("not a string: " + format_word(pres.quiver, w) + " (" + why + ")");
  const Quiver& q = pres.quiver;
  int nv = (int)q.vertices.size();
  int na = (int)q.arrows.size();
  // positions 0..n with their vertices
  std::vector<int> pos_vertex{w.base};
  for (const auto& l : w.letters) pos_vertex.push_back(letter_target(q, l));
  int n = (int)pos_vertex.size();

  Representation rep;
  rep.dims.assign(nv, 0);
  std::vector<int> coord(n);  // basis index of each position within its vertex
  for (int i = 0; i < n; ++i) coord[i] = rep.dims[pos_vertex[i]]++;

  rep.matrices.resize(na);
  for (int a = 0; a < na; ++a)
    rep.matrices[a] = make_matrix(rep.dims[q.arrows[a].dst], rep.dims[q.arrows[a].src]);
  for (int i = 0; i < w.length(); ++i) {
    const Letter& l = w.letters[i];
    int from = l.direct ? i : i + 1;  // position at s(arrow)
    int to = l.direct ? i + 1 : i;    // position at t(arrow)
    rep.matrices[l.arrow][coord[to]][coord[from]] = Rat(1);
  }
  return rep;
}

namespace {

bool is_proper_power(const Word& w) {
  int n = w.length();
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    bool period = true;
    for (int i = 0; i + d < n && period; ++i)
      if (!(w.letters[i] == w.letters[i + d])) period = false;
    if (period) return true;
  }
  return false;
}

}  // namespace

Representation band_module(const Presentation& pres, const Word& b,
                           const Rat& eigenvalue, int size) {
  const Quiver& q = pres.quiver;
  if (eigenvalue.is_zero()) throw Error("band module needs a nonzero eigenvalue");
  if (size < 1) throw Error("band module size must be positive");
  if (b.trivial()) throw Error("band must be nontrivial");
  std::string why;
  if (!is_string_word(pres, b, &why))
    throw Error("not a band: " + format_word(q, b) + " is not a string (" + why + ")");
  if (word_target(q, b) != b.base)
    throw Error("not a band: " + format_word(q, b) + " is not cyclically closed");
  if (is_proper_power(b))
    throw Error("not a band: " + format_word(q, b) + " is a proper power");
  {
    Word sq = b;
    sq.letters.insert(sq.letters.end(), b.letters.begin(), b.letters.end());
    std::string why2;
    if (!is_string_word(pres, sq, &why2))
      throw Error("not a band: square of " + format_word(q, b) +
                  " is not a string (" + why2 + ")");
  }

  int k = b.length();
  std::vector<int> pos_vertex(k);
  pos_vertex[0] = b.base;
  for (int i = 1; i < k; ++i) pos_vertex[i] = letter_target(q, b.letters[i - 1]);

  int nv = (int)q.vertices.size();
  int na = (int)q.arrows.size();
  Representation rep;
  rep.dims.assign(nv, 0);
  std::vector<int> coord(k);
  for (int i = 0; i < k; ++i) {
    coord[i] = rep.dims[pos_vertex[i]];
    rep.dims[pos_vertex[i]] += size;
  }
  rep.matrices.resize(na);
  for (int a = 0; a < na; ++a)
    rep.matrices[a] = make_matrix(rep.dims[q.arrows[a].dst], rep.dims[q.arrows[a].src]);

  Mat jordan = make_matrix(size, size);
  for (int i = 0; i < size; ++i) {
    jordan[i][i] = eigenvalue;
    if (i + 1 < size) jordan[i][i + 1] = Rat(1);
  }

  for (int i = 0; i < k; ++i) {
    const Letter& l = b.letters[i];
    int next = (i + 1) % k;
    // walk step: position i -> position next; the arrow maps its source
    // block to its target block
    int from_pos = l.direct ? i : next;
    int to_pos = l.direct ? next : i;
    bool last = (i == k - 1);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) {
        Rat val = last ? jordan[r][c] : (r == c ? Rat(1) : Rat(0));
        if (!val.is_zero())
          rep.matrices[l.arrow][coord[to_pos] + r][coord[from_pos] + c] = val;
      }
  }
  return rep;
}

RepType is_representation_finite(const Presentation& pres) {
  StructureReport sr = classify(pres);
  if (!sr.is_string)
    throw Error("representation type is decided only for string algebras");
  StringAutomaton aut(pres);
  RepType out;
  out.finite = !aut.has_cycle();
  if (!out.finite) {
    out.witness = aut.cycle_witness();
    if (out.witness) {
      bool dir = false, inv = false;
      for (const auto& l : out.witness->letters) (l.direct ? dir : inv) = true;
      out.witness_is_band = dir && inv;
      if (!out.witness_is_band)
        out.note = "unbounded direct walk (non-admissible or relation-free cycle)";
    }
  }
  return out;
}

Word cyclic_module_string(const Presentation& pres, const Path& p) {
  const Quiver& q = pres.quiver;
  if (p.trivial()) throw Error("cyclic_module_string needs a nontrivial path");
  if (pres.path_is_zero(p))
    throw Error("cyclic_module_string: " + format_path(q, p) +
                " is zero in the algebra");
  Path acc = p;
  std::vector<Letter> letters;
  while (true) {
    int at = acc.target(q);
    int chosen = -1;
    for (int a : q.arrows_from(at)) {
      Path ext = acc;
      ext.arrows.push_back(a);
      if (!pres.path_is_zero(ext)) {
        if (chosen >= 0)
          throw Error("two nonzero continuations at " + q.vertices[at] +
                      "; not a string algebra");
        chosen = a;
      }
    }
    if (chosen < 0) break;
    acc.arrows.push_back(chosen);
    letters.push_back({chosen, true});
  }
  Word w;
  w.base = p.target(q);
  w.letters = std::move(letters);
  return w;
}

}  // namespace stralg
