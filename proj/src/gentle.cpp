#include "stralg/gentle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace stralg {

GCondition satisfies_g_condition(const Presentation& pres) {
  StructureReport sr = classify(pres);
  if (!sr.is_string)
    throw Error("G-condition is defined for monomial string algebras");
  GCondition out;
  for (const RelationCycle& cyc : relation_cycles(pres)) {
    if (cyc.gentle) continue;
    if (!prs_route(pres, cyc).empty()) {
      out.ok = false;
      out.witness = cyc;
      return out;
    }
  }
  return out;
}

static void require_gentle(const Presentation& pres, const char* who) {
  StructureReport sr = classify(pres);
  if (!sr.is_gentle)
    throw Error(std::string(who) + " requires a gentle algebra" +
                (sr.violations.empty() ? "" : " (" + sr.violations[0] + ")"));
}

RelationGraph relation_graph(const Presentation& pres) {
  int na = (int)pres.quiver.arrows.size();
  RelationGraph g;
  g.out.resize(na);
  g.in.resize(na);
  for (const auto& r : pres.relations) {
    if (!r.monomial() || r.terms[0].path.length() != 2) continue;
    int a = r.terms[0].path.arrows[0];
    int b = r.terms[0].path.arrows[1];
    g.out[a].push_back(b);
    g.in[b].push_back(a);
  }
  return g;
}

ForbiddenReport forbidden_structures(const Presentation& pres) {
  require_gentle(pres, "forbidden_structures");
  const Quiver& q = pres.quiver;
  RelationGraph g = relation_graph(pres);
  int na = (int)q.arrows.size();
  // gentle: in/out degree at most one
  for (int a = 0; a < na; ++a)
    if (g.out[a].size() > 1 || g.in[a].size() > 1)
      throw Error("relation graph is not a partial function; input not gentle");

  ForbiddenReport rep;
  std::vector<bool> on_cycle(na, false);
  // components of a partial permutation graph: chains and simple cycles
  for (int a = 0; a < na; ++a) {
    if (on_cycle[a]) continue;
    std::set<int> seen;
    int cur = a;
    while (!g.out[cur].empty()) {
      cur = g.out[cur][0];
      if (cur == a) {  // closed cycle through a
        rep.unbounded = true;
        int x = a;
        std::vector<int> cyc;
        do {
          cyc.push_back(x);
          on_cycle[x] = true;
          x = g.out[x][0];
        } while (x != a);
        rep.f1.push_back({-1, cyc});
        break;
      }
      if (!seen.insert(cur).second) break;  // ran into another cycle
    }
  }

  // chain walks: start at nodes with no in-edge (or in-edge from a cycle
  // node, which cannot happen in a partial permutation), follow out-edges
  for (int a = 0; a < na; ++a) {
    if (on_cycle[a] || !g.in[a].empty()) continue;
    std::vector<int> walk{a};
    int cur = a;
    while (!g.out[cur].empty() && !on_cycle[g.out[cur][0]]) {
      cur = g.out[cur][0];
      walk.push_back(cur);
    }
    ForbiddenPath fp{-1, walk};
    rep.threads.push_back(fp);
    rep.f2.push_back(fp);
    if (!rep.unbounded) rep.maximal_paths.push_back(fp);
  }

  // trivial forbidden paths / threads
  for (int v = 0; v < (int)q.vertices.size(); ++v) {
    auto ins = q.arrows_into(v);
    auto outs = q.arrows_from(v);
    if (ins.size() > 1 || outs.size() > 1) continue;
    if (ins.size() == 1 && outs.size() == 1) {
      Path comp = arrow_path(q, ins[0]);
      comp.arrows.push_back(outs[0]);
      if (!pres.path_is_zero(comp)) continue;
    }
    ForbiddenPath fp{v, {}};
    rep.threads.push_back(fp);
    rep.f2.push_back(fp);
    if (!rep.unbounded) rep.maximal_paths.push_back(fp);
  }
  return rep;
}

HomologicalDims homological_dimensions(const Presentation& pres) {
  ForbiddenReport rep = forbidden_structures(pres);
  HomologicalDims out;
  if (rep.unbounded) {
    out.gldim_finite = false;
  } else {
    out.gldim_finite = true;
    out.gldim = 0;
    for (const auto& f : rep.maximal_paths) out.gldim = std::max(out.gldim, f.length());
  }
  out.injdim = 0;
  for (const auto& f : rep.threads) out.injdim = std::max(out.injdim, f.length());
  out.sup_f2 = 0;
  for (const auto& f : rep.f2) out.sup_f2 = std::max(out.sup_f2, f.length());
  return out;
}

namespace {

// Homotopy-walk letter graph: nodes are direct/inverse letters, edges are
// the legal consecutions; node weight +1 for direct, -1 for inverse.
struct LetterGraph {
  std::vector<Letter> letters;
  std::vector<std::vector<int>> out;
  std::vector<int> weight;
};

LetterGraph homotopy_graph(const Presentation& pres) {
  const Quiver& q = pres.quiver;
  int na = (int)q.arrows.size();
  LetterGraph g;
  for (int a = 0; a < na; ++a) {
    g.letters.push_back({a, true});
    g.letters.push_back({a, false});
  }
  g.out.resize(g.letters.size());
  g.weight.resize(g.letters.size());
  for (size_t i = 0; i < g.letters.size(); ++i)
    g.weight[i] = g.letters[i].direct ? 1 : -1;

  auto zero = [&](int a, int b) {
    Path p = arrow_path(q, a);
    p.arrows.push_back(b);
    return pres.path_is_zero(p);
  };
  for (size_t i = 0; i < g.letters.size(); ++i)
    for (size_t j = 0; j < g.letters.size(); ++j) {
      const Letter& x = g.letters[i];
      const Letter& y = g.letters[j];
      bool ok = false;
      if (x.direct && y.direct)
        ok = q.arrows[x.arrow].dst == q.arrows[y.arrow].src && zero(x.arrow, y.arrow);
      else if (!x.direct && !y.direct)
        ok = q.arrows[y.arrow].dst == q.arrows[x.arrow].src && zero(y.arrow, x.arrow);
      else if (x.direct && !y.direct)
        ok = x.arrow != y.arrow && q.arrows[x.arrow].dst == q.arrows[y.arrow].dst;
      else
        ok = x.arrow != y.arrow && q.arrows[x.arrow].src == q.arrows[y.arrow].src;
      if (ok) g.out[i].push_back((int)j);
    }
  return g;
}

std::vector<std::vector<int>> tarjan_scc(const std::vector<std::vector<int>>& adj) {
  int n = (int)adj.size();
  std::vector<int> idx(n, -1), low(n, 0);
  std::vector<bool> onstack(n, false);
  std::vector<int> stk;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> strong = [&](int u) {
    idx[u] = low[u] = counter++;
    stk.push_back(u);
    onstack[u] = true;
    for (int w : adj[u]) {
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

// Karp: is the minimum cycle mean within this SCC <= 0?
bool min_cycle_mean_nonpositive(const LetterGraph& g, const std::vector<int>& comp) {
  int n = (int)comp.size();
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[comp[i]] = i;
  const long long INF = (long long)1 << 60;
  // D[k][v] = min weight of a k-edge walk from comp[0] to v
  std::vector<std::vector<long long>> D(n + 1, std::vector<long long>(n, INF));
  D[0][0] = 0;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < n; ++i) {
      if (D[k - 1][i] == INF) continue;
      for (int w : g.out[comp[i]]) {
        auto it = local.find(w);
        if (it == local.end()) continue;
        long long cand = D[k - 1][i] + g.weight[w];
        D[k][it->second] = std::min(D[k][it->second], cand);
      }
    }
  for (int v = 0; v < n; ++v) {
    if (D[n][v] == INF) continue;
    bool all_nonpos = true;
    for (int k = 0; k < n; ++k) {
      if (D[k][v] == INF) continue;
      if (D[n][v] - D[k][v] > 0) {
        all_nonpos = false;
        break;
      }
    }
    if (all_nonpos) return true;
  }
  return false;
}

bool has_cycle(const LetterGraph& g, const std::vector<int>& comp) {
  if (comp.size() > 1) return true;
  for (int w : g.out[comp[0]])
    if (w == comp[0]) return true;
  return false;
}

// Shortest balanced nonempty closed walk from any node of the SCC, found by
// BFS over (node, balance) with an expanding bound; existence is guaranteed
// by the caller's mean-cycle test.
std::vector<int> balanced_cycle(const LetterGraph& g, const std::vector<int>& comp) {
  std::set<int> inside(comp.begin(), comp.end());
  for (int bound = 2 * (int)comp.size() + 2;; bound *= 2) {
    if (bound > (1 << 20)) throw Error("balanced-cycle search runaway");
    for (int start : comp) {
      // state: (node, balance); the seed (start, 0) is not entered into
      // `parent`, so a re-arrival at it records the closing edge
      std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> parent;
      std::deque<std::pair<int, int>> queue;
      const std::pair<int, int> seed{start, 0};
      auto push = [&](std::pair<int, int> s, std::pair<int, int> from, int via) {
        if (std::abs(s.second) > bound || parent.count(s)) return;
        parent[s] = {from, via};
        queue.push_back(s);
      };
      for (int w : g.out[start])
        if (inside.count(w)) push({w, g.weight[w]}, seed, w);
      while (!queue.empty() && !parent.count(seed)) {
        auto s = queue.front();
        queue.pop_front();
        for (int w : g.out[s.first])
          if (inside.count(w)) push({w, s.second + g.weight[w]}, s, w);
      }
      if (!parent.count(seed)) continue;
      std::vector<int> nodes;
      std::pair<int, int> cur = seed;
      do {
        auto [from, via] = parent.at(cur);
        nodes.push_back(via);
        cur = from;
      } while (cur != seed);
      std::reverse(nodes.begin(), nodes.end());
      return nodes;
    }
  }
}

}  // namespace

DerivedClass derived_class(const Presentation& pres) {
  require_gentle(pres, "derived_class");
  const Quiver& q = pres.quiver;
  LetterGraph g = homotopy_graph(pres);
  DerivedClass out;
  for (const auto& comp : tarjan_scc(g.out)) {
    if (!has_cycle(g, comp)) continue;
    // negated copy for the max-mean side
    LetterGraph neg = g;
    for (auto& w : neg.weight) w = -w;
    bool min_le0 = min_cycle_mean_nonpositive(g, comp);
    bool max_ge0 = min_cycle_mean_nonpositive(neg, comp);
    if (min_le0 && max_ge0) {
      out.discrete = false;
      std::vector<int> nodes = balanced_cycle(g, comp);
      Word w;
      for (int nd : nodes) w.letters.push_back(g.letters[nd]);
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
      w.base = letter_source(q, w.letters[0]);
      out.witness = canonical_band(q, w);
      return out;
    }
  }
  return out;
}

}  // namespace stralg
