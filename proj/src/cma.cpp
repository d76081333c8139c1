#include "stralg/cma.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "stralg/gentle.hpp"
#include "stralg/rewrite.hpp"

namespace stralg {

namespace {

std::string render_path(const Quiver& q, const Path& p) {
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ',';
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

struct Builder {
  const Presentation& src;
  const Quiver& sq;
  GProjReport g;
  CmaPresentation out;

  // per source arrow: untouched CMA arrow index or the split pair
  std::vector<int> untouched;    // -1 when split
  std::vector<int> split_minus;  // -1 when not split
  std::vector<int> split_plus;

  std::vector<int> gproj_vertex;  // per perfect path (canonical order)
  std::vector<int> in_arrow;      // per perfect path
  std::vector<int> out_arrow;

  explicit Builder(const Presentation& p) : src(p), sq(p.quiver) {
    g = perfect_paths(p);
    out.source = p;
  }

  int perfect_index(const Path& p) const {
    for (size_t i = 0; i < g.perfect_paths.size(); ++i)
      if (g.perfect_paths[i] == p) return (int)i;
    return -1;
  }

  void build_vertices() {
    for (size_t v = 0; v < sq.vertices.size(); ++v) {
      out.presentation.quiver.add_vertex(sq.vertices[v]);
      out.presentation.kinds.push_back(src.kind((int)v));
      out.objects.push_back({false, (int)v, {}});
    }
    gproj_vertex.assign(g.perfect_paths.size(), -1);
    for (size_t i = 0; i < g.perfect_paths.size(); ++i) {
      const Path& p = g.perfect_paths[i];
      int v = out.presentation.quiver.add_vertex("v{" + render_path(sq, p) + "}");
      out.presentation.kinds.push_back(VertexKind::GProj);
      out.objects.push_back({true, -1, p});
      gproj_vertex[i] = v;
    }
  }

  int add_cma_arrow(const std::string& name, int src_v, int dst_v, Path label) {
    int a = out.presentation.quiver.add_arrow(name, src_v, dst_v);
    out.arrow_labels.push_back(std::move(label));
    return a;
  }

  // endpoint rendering for attachment-arrow names
  std::string end_name(bool gproj, int vertex_or_perfect) const {
    return gproj ? render_path(sq, g.perfect_paths[vertex_or_perfect])
                 : sq.vertices[vertex_or_perfect];
  }

  void build_arrows() {
    int na = (int)sq.arrows.size();
    untouched.assign(na, -1);
    split_minus.assign(na, -1);
    split_plus.assign(na, -1);

    std::vector<bool> is_split(na, false);
    for (const Path& p : g.perfect_paths)
      if (p.length() == 1) is_split[p.arrows[0]] = true;

    for (int a = 0; a < na; ++a)
      if (!is_split[a])
        untouched[a] = add_cma_arrow(sq.arrows[a].name, sq.arrows[a].src,
                                     sq.arrows[a].dst, arrow_path(sq, a));

    in_arrow.assign(g.perfect_paths.size(), -1);
    out_arrow.assign(g.perfect_paths.size(), -1);
    for (size_t i = 0; i < g.perfect_paths.size(); ++i) {
      const Path& p = g.perfect_paths[i];
      if (p.length() != 1) continue;
      int a = p.arrows[0];
      split_minus[a] = add_cma_arrow(sq.arrows[a].name + "-", sq.arrows[a].src,
                                     gproj_vertex[i], arrow_path(sq, a));
      split_plus[a] = add_cma_arrow(sq.arrows[a].name + "+", gproj_vertex[i],
                                    sq.arrows[a].dst,
                                    trivial_path(sq.arrows[a].dst));
      in_arrow[i] = split_minus[a];
      out_arrow[i] = split_plus[a];
    }

    // attachment arrows, by increasing length
    for (size_t i = 0; i < g.perfect_paths.size(); ++i) {
      const Path& p = g.perfect_paths[i];
      if (p.length() == 1) continue;

      int best_src = -1, best_tgt = -1;
      for (size_t j = 0; j < g.perfect_paths.size(); ++j) {
        const Path& q = g.perfect_paths[j];
        if (q.length() >= p.length()) continue;
        if (q.source() == p.source() &&
            (best_src < 0 || q.length() > g.perfect_paths[best_src].length()))
          best_src = (int)j;
        if (q.target(sq) == p.target(sq) &&
            (best_tgt < 0 || q.length() > g.perfect_paths[best_tgt].length()))
          best_tgt = (int)j;
      }

      if (best_src >= 0) {
        const Path& q = g.perfect_paths[best_src];
        if (!is_prefix(q, p))
          throw Error("source-sharing perfect path is not a prefix: " +
                      format_path(sq, q) + " vs " + format_path(sq, p));
        Path rest;
        rest.base = q.target(sq);
        rest.arrows.assign(p.arrows.begin() + q.length(), p.arrows.end());
        in_arrow[i] = add_cma_arrow(
            "a{" + end_name(true, best_src) + ";" + end_name(true, (int)i) + "}",
            gproj_vertex[best_src], gproj_vertex[i], rest);
      } else {
        in_arrow[i] = add_cma_arrow(
            "a{" + end_name(false, p.source()) + ";" + end_name(true, (int)i) + "}",
            p.source(), gproj_vertex[i], p);
      }

      if (best_tgt >= 0) {
        const Path& q = g.perfect_paths[best_tgt];
        if (!is_suffix(q, p))
          throw Error("target-sharing perfect path is not a suffix: " +
                      format_path(sq, q) + " vs " + format_path(sq, p));
        out_arrow[i] = add_cma_arrow(
            "a{" + end_name(true, (int)i) + ";" + end_name(true, best_tgt) + "}",
            gproj_vertex[i], gproj_vertex[best_tgt], trivial_path(p.target(sq)));
      } else {
        out_arrow[i] = add_cma_arrow(
            "a{" + end_name(true, (int)i) + ";" + end_name(false, p.target(sq)) + "}",
            gproj_vertex[i], p.target(sq), trivial_path(p.target(sq)));
      }
    }
  }

  // starified image of a source path: split arrows become -,+ pairs, with
  // only the inner half kept at the boundary
  Path starify(const Path& gen) const {
    std::vector<int> arrows;
    int t = gen.length();
    for (int i = 0; i < t; ++i) {
      int a = gen.arrows[i];
      if (untouched[a] >= 0) {
        arrows.push_back(untouched[a]);
      } else if (i == 0) {
        arrows.push_back(split_plus[a]);
      } else if (i == t - 1) {
        arrows.push_back(split_minus[a]);
      } else {
        arrows.push_back(split_minus[a]);
        arrows.push_back(split_plus[a]);
      }
    }
    return make_path(out.presentation.quiver, arrows);
  }

  void emit_starified() {
    for (const auto& r : src.relations) {
      Relation rel;
      rel.terms.push_back({1, starify(r.terms[0].path)});
      out.presentation.relations.push_back(std::move(rel));
    }
  }

  // BFS route from CMA vertex `from` to `to` whose label concatenation
  // equals `w`, avoiding `banned`; shortest, then lexicographically first.
  std::optional<Path> label_route(int from, int to, const Path& w, int banned) const {
    const Quiver& cq = out.presentation.quiver;
    std::vector<int> wverts{w.base};
    for (int a : w.arrows) wverts.push_back(sq.arrows[a].dst);

    struct State {
      int vertex;
      int consumed;
    };
    auto key = [&](int v, int k) { return v * (w.length() + 1) + k; };
    std::map<int, std::vector<int>> parent;  // state -> arrow list so far
    std::deque<State> queue;
    queue.push_back({from, 0});
    parent[key(from, 0)] = {};
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      const std::vector<int>& sofar = parent.at(key(s.vertex, s.consumed));
      if (s.vertex == to && s.consumed == w.length() && !sofar.empty()) {
        return make_path(cq, sofar);
      }
      for (int a = 0; a < (int)cq.arrows.size(); ++a) {
        if (cq.arrows[a].src != s.vertex || cq.arrows[a].dst == banned) continue;
        const Path& lab = out.arrow_labels[a];
        int k = s.consumed;
        if (lab.trivial()) {
          if (lab.base != wverts[k]) continue;
        } else {
          if (k + lab.length() > w.length()) continue;
          if (!std::equal(lab.arrows.begin(), lab.arrows.end(),
                          w.arrows.begin() + k))
            continue;
          k += lab.length();
        }
        if (parent.count(key(cq.arrows[a].dst, k))) continue;
        std::vector<int> nxt = sofar;
        nxt.push_back(a);
        parent[key(cq.arrows[a].dst, k)] = std::move(nxt);
        queue.push_back({cq.arrows[a].dst, k});
      }
    }
    return std::nullopt;
  }

  void emit_commutativity() {
    const Quiver& cq = out.presentation.quiver;
    for (size_t i = 0; i < g.perfect_paths.size(); ++i) {
      const Path& p = g.perfect_paths[i];
      if (p.length() < 2) continue;
      Path direct = make_path(cq, {in_arrow[i], out_arrow[i]});
      Path w = out.arrow_labels[in_arrow[i]];  // out-label is trivial
      auto route = label_route(cq.arrows[in_arrow[i]].src,
                               cq.arrows[out_arrow[i]].dst, w, gproj_vertex[i]);
      if (!route) {
        out.diagnostics.push_back("no alternative route around v{" +
                                  render_path(sq, p) + "}");
        continue;
      }
      Relation rel;
      rel.terms.push_back({1, direct});
      rel.terms.push_back({-1, *route});
      out.presentation.relations.push_back(std::move(rel));
    }
  }

  void emit_reduced_zeros() {
    const Quiver& cq = out.presentation.quiver;
    PathRewriter rw(cq, 2 * (int)cq.arrows.size() + 8);
    for (const auto& r : out.presentation.relations) rw.add(r);

    // minimal zero composites: value hits zero, every proper suffix nonzero
    std::vector<Path> candidates;
    int depth_cap = 3 * (int)cq.arrows.size() + 8;
    std::function<void(Path&, const Path&)> dfs = [&](Path& cpath, const Path& val) {
      if (cpath.length() > depth_cap)
        throw Error("zero-composite search exceeded the depth cap");
      int at = cpath.target(cq);
      for (int a = 0; a < (int)cq.arrows.size(); ++a) {
        if (cq.arrows[a].src != at) continue;
        const Path& lab = out.arrow_labels[a];
        if (lab.trivial() ? lab.base != val.target(sq)
                          : lab.source() != val.target(sq))
          continue;
        Path nval = concat(sq, val, lab);
        cpath.arrows.push_back(a);
        if (src.path_is_zero(nval)) {
          bool minimal = true;
          for (int s = 1; s < cpath.length() && minimal; ++s) {
            Path suffix;
            suffix.base = cq.arrows[cpath.arrows[s]].src;
            suffix.arrows.assign(cpath.arrows.begin() + s, cpath.arrows.end());
            auto v = evaluate_cma_path(out, suffix);
            if (!v) minimal = false;
          }
          if (minimal) candidates.push_back(cpath);
        } else {
          dfs(cpath, nval);
        }
        cpath.arrows.pop_back();
      }
    };
    for (int v = 0; v < (int)cq.vertices.size(); ++v) {
      Path start = trivial_path(v);
      Path val = out.objects[v].gproj ? out.objects[v].path
                                      : trivial_path(out.objects[v].original_vertex);
      dfs(start, val);
    }

    std::sort(candidates.begin(), candidates.end(), [&](const Path& a, const Path& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      if (a.arrows != b.arrows) return a.arrows < b.arrows;
      return a.base < b.base;
    });
    for (const Path& c : candidates) {
      if (rw.reduces_to_zero(c)) continue;
      Relation rel;
      rel.terms.push_back({1, c});
      out.presentation.relations.push_back(rel);
      rw.add(rel);
    }
  }

  void check_semantics() const {
    for (const auto& r : out.presentation.relations) {
      auto v0 = evaluate_cma_path(out, r.terms[0].path);
      if (r.monomial()) {
        if (v0) throw Error("emitted zero relation is semantically nonzero");
      } else {
        auto v1 = evaluate_cma_path(out, r.terms[1].path);
        if (!v0 || !v1 || !(*v0 == *v1))
          throw Error("emitted commutativity relation does not hold semantically");
      }
    }
  }
};

void require_monomial_string(const Presentation& pres, const char* who) {
  StructureReport sr = classify(pres);
  if (!sr.is_string)
    throw Error(std::string(who) + " requires a monomial string algebra" +
                (sr.violations.empty() ? "" : " (" + sr.violations[0] + ")"));
}

}  // namespace

std::optional<Path> evaluate_cma_path(const CmaPresentation& cma, const Path& cma_path) {
  const Quiver& sq = cma.source.quiver;
  const CmaVertexInfo& o = cma.objects[cma_path.source()];
  Path val = o.gproj ? o.path : trivial_path(o.original_vertex);
  for (int a : cma_path.arrows) {
    const Path& lab = cma.arrow_labels[a];
    val = concat(sq, val, lab);
    if (cma.source.path_is_zero(val)) return std::nullopt;
  }
  return val;
}

CmaPresentation build_cma(const Presentation& pres) {
  require_monomial_string(pres, "build_cma");
  Builder b(pres);
  b.build_vertices();
  b.build_arrows();
  b.emit_starified();
  b.emit_commutativity();
  b.emit_reduced_zeros();
  size_t emitted = b.out.presentation.relations.size();
  validate(b.out.presentation);
  if (b.out.presentation.relations.size() != emitted)
    throw Error("emitted relation set was not minimal");
  b.check_semantics();
  return std::move(b.out);
}

CmaPresentation build_cma_split(const Presentation& pres) {
  require_monomial_string(pres, "build_cma_split");
  GCondition gc = satisfies_g_condition(pres);
  if (!gc.ok) {
    std::string cyc = gc.witness
                          ? format_path(pres.quiver, gc.witness->cycle)
                          : std::string("?");
    throw Error("G-condition fails: non-gentle relation cycle " + cyc +
                " provides a perfect path");
  }
  Builder b(pres);
  b.build_vertices();
  b.build_arrows();
  b.emit_starified();
  validate(b.out.presentation);
  b.check_semantics();
  return std::move(b.out);
}

}  // namespace stralg
