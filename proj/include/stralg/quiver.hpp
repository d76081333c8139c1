#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stralg/error.hpp"

namespace stralg {

struct Arrow {
  std::string name;
  int src = -1;
  int dst = -1;
};

// Finite quiver. Vertex and arrow order is declaration order and is the
// canonical ordering for all deterministic outputs.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int add_vertex(const std::string& id);
  int add_arrow(const std::string& name, int src, int dst);

  int vertex_index(const std::string& id) const;  // -1 if unknown
  int arrow_index(const std::string& name) const;

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

 private:
  std::unordered_map<std::string, int> vertex_idx_;
  std::unordered_map<std::string, int> arrow_idx_;
};

// A composable arrow sequence. `base` is always the source vertex, so a
// trivial path is {base, {}}.
struct Path {
  int base = -1;
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  int length() const { return (int)arrows.size(); }
  int source() const { return base; }
  int target(const Quiver& q) const {
    return arrows.empty() ? base : q.arrows[arrows.back()].dst;
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.base == b.base && a.arrows == b.arrows;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
};

Path trivial_path(int vertex);
Path arrow_path(const Quiver& q, int arrow);
// Throws if the arrow sequence does not compose head-to-tail.
Path make_path(const Quiver& q, const std::vector<int>& arrows);
Path concat(const Quiver& q, const Path& a, const Path& b);

bool is_prefix(const Path& sub, const Path& of);
bool is_suffix(const Path& sub, const Path& of);
// Contiguous subpath (trivial paths: vertex visited by `of`).
bool is_subpath(const Quiver& q, const Path& sub, const Path& of);

std::string format_path(const Quiver& q, const Path& p);  // "a.b.c" / "e_1"

// Canonical order for outputs: (length, arrow-name sequence); trivial paths
// first, by vertex declaration order.
bool path_less(const Quiver& q, const Path& a, const Path& b);

struct RelTerm {
  int coeff = 1;  // +1 or -1
  Path path;
};

// One term = monomial generator; two terms with coefficients (1, -1) on
// parallel paths = commutativity relation.
struct Relation {
  std::vector<RelTerm> terms;
  bool monomial() const { return terms.size() == 1; }
};

enum class VertexKind { Original, GProj };

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<VertexKind> kinds;  // parallel to quiver.vertices

  bool is_monomial() const;
  int max_generator_length() const;
  // Default enumeration cap: 4 * |arrows| + max generator length.
  int path_length_cap() const;

  // Monomial membership: p lies in the ideal iff some generator is a
  // subpath. Throws on non-monomial presentations.
  bool path_is_zero(const Path& p) const;

  VertexKind kind(int v) const {
    return v < (int)kinds.size() ? kinds[v] : VertexKind::Original;
  }
};

// Structural checks + normalization (drops duplicate and non-minimal
// monomial generators); for monomial presentations also verifies the
// finite-dimensionality witness by bounded path enumeration.
void validate(Presentation& pres);

bool structurally_equal(const Presentation& a, const Presentation& b);

}  // namespace stralg
