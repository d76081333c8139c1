#include "stralg/gproj.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stralg {

namespace {

struct NonzeroCtx {
  const Presentation& pres;
  std::vector<Path> nontrivial;  // nonzero nontrivial paths, canonical order

  explicit NonzeroCtx(const Presentation& p) : pres(p) {
    for (const Path& x : nonzero_paths(p))
      if (!x.trivial()) nontrivial.push_back(x);
  }
};

PairVerdict perfect_pair_impl(const NonzeroCtx& ctx, const Path& p, const Path& q) {
  const Presentation& pres = ctx.pres;
  const Quiver& qv = pres.quiver;
  PairVerdict v;
  if (p.trivial() || q.trivial()) throw Error("perfect pair needs nontrivial paths");
  if (pres.path_is_zero(p) || pres.path_is_zero(q))
    throw Error("perfect pair needs nonzero paths");
  if (p.target(qv) != q.source()) {
    v.reason = "t(" + format_path(qv, p) + ") != s(" + format_path(qv, q) + ")";
    return v;
  }
  Path pq = concat(qv, p, q);
  if (!pres.path_is_zero(pq)) {
    v.reason = format_path(qv, pq) + " != 0";
    v.witness = pq;
    return v;
  }
  for (const Path& w : ctx.nontrivial) {
    if (w.source() == p.target(qv) && pres.path_is_zero(concat(qv, p, w)) &&
        !is_subpath(qv, q, w)) {
      v.reason = "zero continuation " + format_path(qv, w) +
                 " does not contain " + format_path(qv, q);
      v.witness = w;
      return v;
    }
    if (w.target(qv) == q.source() && pres.path_is_zero(concat(qv, w, q)) &&
        !is_subpath(qv, p, w)) {
      v.reason = "zero precomposition " + format_path(qv, w) +
                 " does not contain " + format_path(qv, p);
      v.witness = w;
      return v;
    }
  }
  v.ok = true;
  return v;
}

std::optional<Path> partner_impl(const NonzeroCtx& ctx, const Path& p) {
  const Quiver& qv = ctx.pres.quiver;
  std::vector<Path> cands;
  for (const Path& w : ctx.nontrivial)
    if (w.source() == p.target(qv) &&
        ctx.pres.path_is_zero(concat(qv, p, w)))
      cands.push_back(w);
  std::sort(cands.begin(), cands.end(),
            [&](const Path& a, const Path& b) { return path_less(qv, a, b); });
  for (const Path& w : cands)
    if (perfect_pair_impl(ctx, p, w).ok) return w;
  return std::nullopt;
}

}  // namespace

PairVerdict is_perfect_pair(const Presentation& pres, const Path& p, const Path& q) {
  NonzeroCtx ctx(pres);
  return perfect_pair_impl(ctx, p, q);
}

std::optional<Path> perfect_partner(const Presentation& pres, const Path& p) {
  NonzeroCtx ctx(pres);
  return partner_impl(ctx, p);
}

std::vector<int> ideal_dimvec(const Presentation& pres, const Path& p) {
  const Quiver& q = pres.quiver;
  std::vector<int> dims(q.vertices.size(), 0);
  std::vector<Path> frontier{p};
  dims[p.target(q)]++;
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& x : frontier)
      for (int a : q.arrows_from(x.target(q))) {
        Path ext = x;
        ext.arrows.push_back(a);
        if (!pres.path_is_zero(ext)) {
          dims[ext.target(q)]++;
          next.push_back(std::move(ext));
        }
      }
    frontier = std::move(next);
  }
  return dims;
}

GProjReport perfect_paths(const Presentation& pres) {
  StructureReport sr = classify(pres);
  if (!sr.is_string)
    throw Error("perfect-path search requires a monomial string algebra");
  const Quiver& qv = pres.quiver;
  NonzeroCtx ctx(pres);

  int n = (int)ctx.nontrivial.size();
  std::vector<int> succ(n, -1);
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int i = 0; i < n; ++i)
    index[{ctx.nontrivial[i].base, ctx.nontrivial[i].arrows}] = i;
  for (int i = 0; i < n; ++i) {
    auto q = partner_impl(ctx, ctx.nontrivial[i]);
    if (q) succ[i] = index.at({q->base, q->arrows});
  }

  // nodes on cycles of the successor map
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<bool> on_cycle(n, false);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<int> trail;
    int cur = s;
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      trail.push_back(cur);
      cur = succ[cur];
    }
    if (cur >= 0 && state[cur] == 1) {
      // found a new cycle; mark from cur onwards
      auto it = std::find(trail.begin(), trail.end(), cur);
      for (; it != trail.end(); ++it) on_cycle[*it] = true;
    }
    for (int x : trail) state[x] = 2;
  }

  GProjReport rep;
  for (int i = 0; i < n; ++i)
    if (on_cycle[i]) rep.perfect_paths.push_back(ctx.nontrivial[i]);
  std::sort(rep.perfect_paths.begin(), rep.perfect_paths.end(),
            [&](const Path& a, const Path& b) { return path_less(qv, a, b); });

  // orbits
  std::vector<bool> taken(n, false);
  std::vector<PPS> orbits;
  for (int i = 0; i < n; ++i) {
    if (!on_cycle[i] || taken[i]) continue;
    std::vector<int> orbit;
    int cur = i;
    do {
      orbit.push_back(cur);
      taken[cur] = true;
      cur = succ[cur];
    } while (cur != i);
    // rotate canonically
    int best = 0;
    for (int k = 1; k < (int)orbit.size(); ++k)
      if (path_less(qv, ctx.nontrivial[orbit[k]], ctx.nontrivial[orbit[best]]))
        best = k;
    std::rotate(orbit.begin(), orbit.begin() + best, orbit.end());
    PPS pps;
    for (int x : orbit) pps.paths.push_back(ctx.nontrivial[x]);
    orbits.push_back(std::move(pps));
  }
  std::sort(orbits.begin(), orbits.end(), [&](const PPS& a, const PPS& b) {
    return path_less(qv, a.paths[0], b.paths[0]);
  });
  rep.orbits = std::move(orbits);

  for (int v = 0; v < (int)qv.vertices.size(); ++v) {
    GProjObject o;
    o.projective = true;
    o.vertex = v;
    o.dimvec = ideal_dimvec(pres, trivial_path(v));
    rep.objects.push_back(std::move(o));
  }
  for (const Path& p : rep.perfect_paths) {
    GProjObject o;
    o.projective = false;
    o.path = p;
    o.word = cyclic_module_string(pres, p);
    o.dimvec = ideal_dimvec(pres, p);
    rep.objects.push_back(std::move(o));
  }
  rep.cm_finite = true;
  rep.cm_free = rep.perfect_paths.empty();
  return rep;
}

namespace {

struct PairNode {
  int a = -1;    // positioned generator index (into cycle.generators)
  int b = -1;
  int delta = 0; // lifted gap in (0, len(gen a))
};

}  // namespace

std::vector<PrsEntry> prs_route(const Presentation& pres, const RelationCycle& cycle) {
  const Quiver& qv = pres.quiver;
  NonzeroCtx ctx(pres);
  int n = cycle.cycle.length();
  const auto& gens = cycle.generators;
  int k = (int)gens.size();
  auto gen_path = [&](int i) -> const Path& {
    return pres.relations[gens[i].relation].terms[0].path;
  };

  // meet of (a, b, delta): suffix of gen a starting at index delta, read off
  // the cycle from offset o_a + delta
  auto meet_of = [&](const PairNode& nd) {
    const Path& ga = gen_path(nd.a);
    std::vector<int> arrows(ga.arrows.begin() + nd.delta, ga.arrows.end());
    return make_path(qv, arrows);
  };

  std::vector<PairNode> nodes;
  for (int a = 0; a < k; ++a) {
    int la = gen_path(a).length();
    for (int b = 0; b < k; ++b) {
      int d0 = (gens[b].offset - gens[a].offset) % n;
      if (d0 <= 0) d0 += n;
      for (int d = d0; d <= la - 1; d += n) nodes.push_back({a, b, d});
    }
  }

  // Junction side-arrow conditions on a candidate pair of consecutive meets.
  auto junction_ok = [&](const Path& in, const Path& out) {
    int v = out.source();
    for (int arr : qv.arrows_from(v)) {
      if (arr == out.arrows.front()) continue;
      Path ext = in;
      ext.arrows.push_back(arr);
      if (pres.path_is_zero(ext)) return false;
    }
    for (int arr : qv.arrows_into(v)) {
      if (arr == in.arrows.back()) continue;
      Path ext = arrow_path(qv, arr);
      ext.arrows.insert(ext.arrows.end(), out.arrows.begin(), out.arrows.end());
      if (pres.path_is_zero(ext)) return false;
    }
    return true;
  };

  // successor: (a,b,d) -> (b,c,d') with d' = len(a) - d, filtered by the
  // junction conditions and the perfect-pair definition
  int m = (int)nodes.size();
  std::vector<int> succ(m, -1);
  for (int i = 0; i < m; ++i) {
    int need = gen_path(nodes[i].a).length() - nodes[i].delta;
    Path in = meet_of(nodes[i]);
    for (int j = 0; j < m; ++j) {
      if (nodes[j].a != nodes[i].b || nodes[j].delta != need) continue;
      Path out = meet_of(nodes[j]);
      if (!junction_ok(in, out)) continue;
      if (!perfect_pair_impl(ctx, in, out).ok) continue;
      if (succ[i] >= 0)
        throw Error("perfect-partner uniqueness violated on a relation cycle");
      succ[i] = j;
    }
  }

  // cycles of the partial successor function
  std::vector<PrsEntry> out;
  std::set<std::vector<int>> seen_cycles;
  std::vector<int> state(m, 0);
  for (int s = 0; s < m; ++s) {
    if (state[s]) continue;
    std::vector<int> trail;
    int cur = s;
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      trail.push_back(cur);
      cur = succ[cur];
    }
    if (cur >= 0 && state[cur] == 1) {
      auto it = std::find(trail.begin(), trail.end(), cur);
      std::vector<int> cyc(it, trail.end());
      // canonical key: rotation with smallest node index first
      std::vector<int> key = cyc;
      auto mi = std::min_element(key.begin(), key.end());
      std::rotate(key.begin(), mi, key.end());
      if (seen_cycles.insert(key).second) {
        int t = (int)key.size();
        for (int start = 0; start < t; ++start) {
          PrsEntry e;
          for (int x = 0; x < t; ++x) {
            int nd = key[(start + x) % t];
            e.paths.push_back(meet_of(nodes[nd]));
            e.generators.push_back(gen_path(nodes[key[(start + x + 1) % t]].a));
          }
          out.push_back(std::move(e));
        }
      }
    }
    for (int x : trail) state[x] = 2;
  }

  std::sort(out.begin(), out.end(), [&](const PrsEntry& a, const PrsEntry& b) {
    return path_less(qv, a.paths[0], b.paths[0]);
  });
  return out;
}

}  // namespace stralg
