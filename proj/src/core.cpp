#include "stralg/core.hpp"

#include <algorithm>
#include <set>

namespace stralg {

StructureReport classify(const Presentation& pres) {
  StructureReport rep;
  const Quiver& q = pres.quiver;
  rep.is_monomial = pres.is_monomial();

  std::vector<std::string> v;
  if (!rep.is_monomial) v.push_back("ideal has a non-monomial generator");

  for (int x = 0; x < (int)q.vertices.size(); ++x) {
    int out = (int)q.arrows_from(x).size();
    int in = (int)q.arrows_into(x).size();
    if (out > 2)
      v.push_back("vertex " + q.vertices[x] + " has " + std::to_string(out) +
                  " outgoing arrows");
    if (in > 2)
      v.push_back("vertex " + q.vertices[x] + " has " + std::to_string(in) +
                  " incoming arrows");
  }

  auto comp_zero = [&](int a, int b) {
    // is ab zero, only meaningful for monomial presentations
    Path p = arrow_path(q, a);
    p.arrows.push_back(b);
    return pres.path_is_zero(p);
  };

  if (rep.is_monomial) {
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
      int nonzero_out = 0, nonzero_in = 0, zero_out = 0, zero_in = 0;
      for (int b : q.arrows_from(q.arrows[a].dst))
        comp_zero(a, b) ? ++zero_out : ++nonzero_out;
      for (int b : q.arrows_into(q.arrows[a].src))
        comp_zero(b, a) ? ++zero_in : ++nonzero_in;
      if (nonzero_out > 1)
        v.push_back("arrow " + q.arrows[a].name + " has " +
                    std::to_string(nonzero_out) + " nonzero continuations");
      if (nonzero_in > 1)
        v.push_back("arrow " + q.arrows[a].name + " has " +
                    std::to_string(nonzero_in) + " nonzero precompositions");
      if (zero_out > 1)
        v.push_back("gentle: arrow " + q.arrows[a].name + " has " +
                    std::to_string(zero_out) + " zero continuations");
      if (zero_in > 1)
        v.push_back("gentle: arrow " + q.arrows[a].name + " has " +
                    std::to_string(zero_in) + " zero precompositions");
    }
  }

  bool gens_len_two = true;
  for (const auto& r : pres.relations)
    for (const auto& t : r.terms)
      if (t.path.length() != 2) gens_len_two = false;
  if (!gens_len_two)
    v.push_back("gentle: ideal has a generator of length != 2");

  auto has = [&](const std::string& prefix) {
    for (const auto& s : v)
      if (s.rfind(prefix, 0) == 0) return true;
    return false;
  };
  rep.is_string = rep.is_monomial && !has("vertex") && !has("arrow");
  rep.is_gentle = rep.is_string && !has("gentle");
  rep.violations = std::move(v);
  return rep;
}

std::vector<Path> nonzero_paths(const Presentation& pres) {
  if (!pres.is_monomial())
    throw Error("nonzero_paths requires a monomial presentation");
  const Quiver& q = pres.quiver;
  const int cap = pres.path_length_cap();
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (int vtx = 0; vtx < (int)q.vertices.size(); ++vtx) {
    all.push_back(trivial_path(vtx));
    frontier.push_back(trivial_path(vtx));
  }
  for (int len = 1; !frontier.empty(); ++len) {
    if (len > cap)
      throw Error("nonzero-path enumeration exceeded the length cap " +
                  std::to_string(cap) + " (non-admissible input?)");
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int a : q.arrows_from(p.target(q))) {
        Path ext = p;
        ext.arrows.push_back(a);
        if (!pres.path_is_zero(ext)) next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end(),
              [&](const Path& a, const Path& b) { return path_less(q, a, b); });
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

std::vector<int> overlap_offsets(const Quiver&, const Path& p, const Path& r) {
  std::vector<int> offsets;
  if (p.trivial() || r.trivial()) return offsets;
  int l = p.length(), m = r.length();
  for (int i = 0; i < l; ++i) {
    if (i + m < l) continue;  // must reach at least p's end
    bool ok = true;
    for (int j = 0; i + j < l && j < m; ++j)
      if (p.arrows[i + j] != r.arrows[j]) {
        ok = false;
        break;
      }
    if (ok) offsets.push_back(i);
  }
  return offsets;
}

OverlapResult overlap_at(const Quiver& q, const Path& p, const Path& r, int offset) {
  auto offs = overlap_offsets(q, p, r);
  if (std::find(offs.begin(), offs.end(), offset) == offs.end())
    throw Error("no overlap alignment of " + format_path(q, r) + " in " +
                format_path(q, p) + " at offset " + std::to_string(offset));
  OverlapResult res;
  res.meet.base = q.arrows[p.arrows[offset]].src;
  res.meet.arrows.assign(p.arrows.begin() + offset, p.arrows.end());
  res.join = p;
  int done = p.length() - offset;  // arrows of r already inside p
  res.join.arrows.insert(res.join.arrows.end(), r.arrows.begin() + done,
                         r.arrows.end());
  return res;
}

OverlapResult overlap(const Quiver& q, const Path& p, const Path& r) {
  auto offs = overlap_offsets(q, p, r);
  if (offs.empty())
    throw Error("no overlap alignment of " + format_path(q, r) + " in " +
                format_path(q, p));
  if (offs.size() > 1) {
    std::string s;
    for (int o : offs) s += (s.empty() ? "" : ", ") + std::to_string(o);
    throw Error("ambiguous overlap of " + format_path(q, r) + " in " +
                format_path(q, p) + " (offsets " + s +
                "); pass an explicit offset");
  }
  return overlap_at(q, p, r, offs[0]);
}

bool reads_off_cycle(const Quiver&, const Path& cycle, const Path& p, int offset) {
  int n = cycle.length();
  if (n == 0 || p.trivial()) return false;
  for (int j = 0; j < p.length(); ++j)
    if (p.arrows[j] != cycle.arrows[(offset + j) % n]) return false;
  return true;
}

namespace {

// All oriented cycles with pairwise-distinct arrows, each rotated so the
// smallest arrow index comes first. Vertices may repeat (figure-eights
// count).
std::vector<Path> oriented_cycles(const Quiver& q) {
  std::vector<Path> cycles;
  std::set<std::vector<int>> seen;
  int m = (int)q.arrows.size();
  std::vector<int> stack;
  std::vector<bool> used(m, false);

  std::function<void(int, int)> dfs = [&](int start_arrow, int at) {
    if (at == q.arrows[start_arrow].src && !stack.empty()) {
      // closed; canonical if start arrow is the minimum
      if (*std::min_element(stack.begin(), stack.end()) == start_arrow &&
          seen.insert(stack).second)
        cycles.push_back(make_path(q, stack));
      // fall through: longer cycles may reuse this vertex
    }
    for (int a = 0; a < m; ++a) {
      if (used[a] || a < start_arrow || q.arrows[a].src != at) continue;
      used[a] = true;
      stack.push_back(a);
      dfs(start_arrow, q.arrows[a].dst);
      stack.pop_back();
      used[a] = false;
    }
  };

  for (int a = 0; a < m; ++a) {
    used[a] = true;
    stack.push_back(a);
    dfs(a, q.arrows[a].dst);
    stack.pop_back();
    used[a] = false;
  }
  return cycles;
}

}  // namespace

std::vector<RelationCycle> relation_cycles(const Presentation& pres) {
  const Quiver& q = pres.quiver;
  std::vector<RelationCycle> out;
  for (const Path& cyc : oriented_cycles(q)) {
    int n = cyc.length();
    std::vector<PositionedGenerator> gens;
    for (int r = 0; r < (int)pres.relations.size(); ++r) {
      if (!pres.relations[r].monomial()) continue;
      const Path& g = pres.relations[r].terms[0].path;
      for (int o = 0; o < n; ++o)
        if (reads_off_cycle(q, cyc, g, o))
          gens.push_back({r, o, (o + g.length() - 1) / n});
    }
    if (gens.empty()) continue;

    // Contact digraph: edge a -> b when b starts inside or right at the end
    // of a (lifted gap in (0, len(a)]). A directed cycle = a cyclic covering
    // chain.
    int k = (int)gens.size();
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i) {
      int li = pres.relations[gens[i].relation].terms[0].path.length();
      for (int j = 0; j < k; ++j) {
        int delta = (gens[j].offset - gens[i].offset) % n;
        if (delta <= 0) delta += n;  // smallest positive lift
        for (int d = delta; d <= li; d += n) {
          adj[i].push_back(j);
          break;
        }
      }
    }
    // cycle detection
    std::vector<int> color(k, 0);
    bool has_cycle = false;
    std::function<void(int)> visit = [&](int u) {
      color[u] = 1;
      for (int w : adj[u]) {
        if (color[w] == 1) has_cycle = true;
        if (color[w] == 0 && !has_cycle) visit(w);
      }
      color[u] = 2;
    };
    for (int i = 0; i < k && !has_cycle; ++i)
      if (color[i] == 0) visit(i);
    if (!has_cycle) continue;

    RelationCycle rc;
    rc.cycle = cyc;
    std::sort(gens.begin(), gens.end(),
              [](const PositionedGenerator& a, const PositionedGenerator& b) {
                if (a.offset != b.offset) return a.offset < b.offset;
                return a.relation < b.relation;
              });
    rc.generators = std::move(gens);
    rc.gentle = true;
    for (const auto& g : rc.generators)
      if (pres.relations[g.relation].terms[0].path.length() != 2)
        rc.gentle = false;
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace stralg
