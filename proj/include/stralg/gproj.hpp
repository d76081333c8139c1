#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/core.hpp"
#include "stralg/words.hpp"

namespace stralg {

struct PairVerdict {
  bool ok = false;
  std::string reason;            // failure explanation
  std::optional<Path> witness;   // violating continuation, when applicable
};

// Definition-based perfect-pair test; quantifiers range over the finite
// nonzero-path list. p, q must be nonzero nontrivial.
PairVerdict is_perfect_pair(const Presentation& pres, const Path& p, const Path& q);

// The unique q with is_perfect_pair(p, q), found by scanning the
// zero-continuations of p in increasing length.
std::optional<Path> perfect_partner(const Presentation& pres, const Path& p);

// Cyclic orbit of the perfect-partner successor map, rotated so the
// canonically smallest path comes first.
struct PPS {
  std::vector<Path> paths;
};

struct GProjObject {
  bool projective = false;
  int vertex = -1;             // projective case
  Path path;                   // nontrivial case: the perfect path p
  Word word;                   // cyclic_module_string(p) for nontrivial
  std::vector<int> dimvec;     // per-vertex dimensions of the module
};

struct GProjReport {
  std::vector<Path> perfect_paths;  // canonical order
  std::vector<PPS> orbits;
  std::vector<GProjObject> objects;  // all projectives, then nontrivials
  bool cm_finite = true;
  bool cm_free = false;
};

GProjReport perfect_paths(const Presentation& pres);

// One perfect relation sequence per starting point: generators[i] is the
// product paths[i]·paths[i+1] (indices cyclic).
struct PrsEntry {
  std::vector<Path> generators;
  std::vector<Path> paths;
};

// PPSs found through the relation-cycle / positioned-generator route
// (Construction-style), independent of the successor-map search.
std::vector<PrsEntry> prs_route(const Presentation& pres, const RelationCycle& cycle);

// Dimension vector of the right ideal pA (multiplicity of each vertex among
// the nonzero continuations of p).
std::vector<int> ideal_dimvec(const Presentation& pres, const Path& p);

}  // namespace stralg
