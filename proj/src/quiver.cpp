#include "stralg/quiver.hpp"

#include <algorithm>

namespace stralg {

int Quiver::add_vertex(const std::string& id) {
  if (vertex_idx_.count(id)) throw Error("duplicate vertex id '" + id + "'");
  vertices.push_back(id);
  vertex_idx_[id] = (int)vertices.size() - 1;
  return (int)vertices.size() - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int dst) {
  if (arrow_idx_.count(name)) throw Error("duplicate arrow name '" + name + "'");
  if (src < 0 || src >= (int)vertices.size() || dst < 0 ||
      dst >= (int)vertices.size())
    throw Error("arrow '" + name + "' has an undeclared endpoint");
  arrows.push_back({name, src, dst});
  arrow_idx_[name] = (int)arrows.size() - 1;
  return (int)arrows.size() - 1;
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_idx_.find(id);
  return it == vertex_idx_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_idx_.find(name);
  return it == arrow_idx_.end() ? -1 : it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < (int)arrows.size(); ++a)
    if (arrows[a].src == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int a = 0; a < (int)arrows.size(); ++a)
    if (arrows[a].dst == v) out.push_back(a);
  return out;
}

Path trivial_path(int vertex) {
  Path p;
  p.base = vertex;
  return p;
}

Path arrow_path(const Quiver& q, int arrow) {
  Path p;
  p.base = q.arrows[arrow].src;
  p.arrows = {arrow};
  return p;
}

Path make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw Error("make_path needs at least one arrow");
  Path p;
  p.base = q.arrows[arrows[0]].src;
  p.arrows = arrows;
  for (size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrows[arrows[i]].dst != q.arrows[arrows[i + 1]].src)
      throw Error("arrows do not compose: " + q.arrows[arrows[i]].name + "." +
                  q.arrows[arrows[i + 1]].name);
  return p;
}

Path concat(const Quiver& q, const Path& a, const Path& b) {
  if (a.target(q) != b.source())
    throw Error("paths do not compose: " + format_path(q, a) + " then " +
                format_path(q, b));
  Path p = a;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

bool is_prefix(const Path& sub, const Path& of) {
  if (sub.length() > of.length()) return false;
  return std::equal(sub.arrows.begin(), sub.arrows.end(), of.arrows.begin());
}

bool is_suffix(const Path& sub, const Path& of) {
  if (sub.length() > of.length()) return false;
  return std::equal(sub.arrows.rbegin(), sub.arrows.rend(),
                    of.arrows.rbegin());
}

bool is_subpath(const Quiver& q, const Path& sub, const Path& of) {
  if (sub.trivial()) {
    if (sub.base == of.base) return true;
    int v = of.base;
    for (int a : of.arrows) {
      v = q.arrows[a].dst;
      if (v == sub.base) return true;
    }
    return false;
  }
  if (sub.length() > of.length()) return false;
  for (int i = 0; i + sub.length() <= of.length(); ++i)
    if (std::equal(sub.arrows.begin(), sub.arrows.end(),
                   of.arrows.begin() + i))
      return true;
  return false;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertices[p.base];
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial()) return a.base < b.base;
  for (int i = 0; i < a.length(); ++i) {
    const std::string& na = q.arrows[a.arrows[i]].name;
    const std::string& nb = q.arrows[b.arrows[i]].name;
    if (na != nb) return na < nb;
  }
  return false;
}

bool Presentation::is_monomial() const {
  for (const auto& r : relations)
    if (!r.monomial()) return false;
  return true;
}

int Presentation::max_generator_length() const {
  int m = 0;
  for (const auto& r : relations)
    for (const auto& t : r.terms) m = std::max(m, t.path.length());
  return m;
}

int Presentation::path_length_cap() const {
  return 4 * (int)quiver.arrows.size() + max_generator_length();
}

bool Presentation::path_is_zero(const Path& p) const {
  if (!is_monomial())
    throw Error("monomial ideal membership asked on a non-monomial presentation");
  for (const auto& r : relations)
    if (is_subpath(quiver, r.terms[0].path, p) && !r.terms[0].path.trivial())
      return true;
  return false;
}

static void check_relation_shape(const Presentation& pres, const Relation& r) {
  if (r.terms.empty() || r.terms.size() > 2)
    throw Error("relation must have one or two terms");
  for (const auto& t : r.terms) {
    if (t.coeff != 1 && t.coeff != -1)
      throw Error("relation coefficients must be +1 or -1");
    if (t.path.trivial()) throw Error("relation term must be a nontrivial path");
  }
  if (r.monomial()) {
    if (r.terms[0].coeff != 1) throw Error("monomial generator must have coefficient 1");
    if (r.terms[0].path.length() < 2)
      throw Error("monomial generator '" +
                  format_path(pres.quiver, r.terms[0].path) +
                  "' has length < 2");
  } else {
    if (r.terms[0].coeff * r.terms[1].coeff != -1)
      throw Error("binomial relation must have coefficients (1, -1)");
    const Path& p1 = r.terms[0].path;
    const Path& p2 = r.terms[1].path;
    if (p1.source() != p2.source() || p1.target(pres.quiver) != p2.target(pres.quiver))
      throw Error("binomial relation terms are not parallel: " +
                  format_path(pres.quiver, p1) + " vs " +
                  format_path(pres.quiver, p2));
  }
}

void validate(Presentation& pres) {
  if (pres.kinds.size() < pres.quiver.vertices.size())
    pres.kinds.resize(pres.quiver.vertices.size(), VertexKind::Original);
  for (const auto& r : pres.relations) check_relation_shape(pres, r);

  // Keep monomial generators minimal: drop exact duplicates and any
  // generator properly containing another one.
  std::vector<Relation> kept;
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    const Relation& r = pres.relations[i];
    if (!r.monomial()) {
      kept.push_back(r);
      continue;
    }
    bool redundant = false;
    for (size_t j = 0; j < pres.relations.size() && !redundant; ++j) {
      if (i == j || !pres.relations[j].monomial()) continue;
      const Path& a = r.terms[0].path;
      const Path& b = pres.relations[j].terms[0].path;
      if (a == b ? j < i : is_subpath(pres.quiver, b, a)) redundant = true;
    }
    if (!redundant) kept.push_back(r);
  }
  pres.relations = std::move(kept);

  if (pres.is_monomial()) {
    // Finite-dimensionality witness: nonzero-path enumeration must stall
    // below the cap. The enumeration itself lives in core.cpp; replicate the
    // frontier walk here to avoid a cyclic include.
    const int cap = pres.path_length_cap();
    std::vector<Path> frontier;
    for (int v = 0; v < (int)pres.quiver.vertices.size(); ++v)
      frontier.push_back(trivial_path(v));
    for (int len = 1; len <= cap + 1; ++len) {
      std::vector<Path> next;
      for (const Path& p : frontier)
        for (int a : pres.quiver.arrows_from(p.target(pres.quiver))) {
          Path ext = p;
          ext.arrows.push_back(a);
          if (!pres.path_is_zero(ext)) next.push_back(std::move(ext));
        }
      if (next.empty()) break;
      if (len > cap)
        throw Error(
            "non-admissible presentation: nonzero paths exceed the length cap " +
            std::to_string(cap));
      frontier = std::move(next);
    }
  }
}

bool structurally_equal(const Presentation& a, const Presentation& b) {
  if (a.quiver.vertices != b.quiver.vertices) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const Arrow& x = a.quiver.arrows[i];
    const Arrow& y = b.quiver.arrows[i];
    if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (size_t i = 0; i < a.relations.size(); ++i) {
    const auto& ra = a.relations[i].terms;
    const auto& rb = b.relations[i].terms;
    if (ra.size() != rb.size()) return false;
    for (size_t j = 0; j < ra.size(); ++j)
      if (ra[j].coeff != rb[j].coeff || !(ra[j].path == rb[j].path))
        return false;
  }
  for (size_t v = 0; v < a.quiver.vertices.size(); ++v)
    if (a.kind((int)v) != b.kind((int)v)) return false;
  return true;
}

}  // namespace stralg
