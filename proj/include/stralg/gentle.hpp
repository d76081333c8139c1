#pragma once

#include <optional>
#include <vector>

#include "stralg/core.hpp"
#include "stralg/gproj.hpp"
#include "stralg/words.hpp"

namespace stralg {

struct GCondition {
  bool ok = true;
  std::optional<RelationCycle> witness;  // offending non-gentle cycle
};

// Every relation cycle whose PRS machinery yields a perfect path must be
// gentle.
GCondition satisfies_g_condition(const Presentation& pres);

// Nodes = arrows, edge a -> b iff ab is a generator.
struct RelationGraph {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};
RelationGraph relation_graph(const Presentation& pres);

// arrows empty => trivial forbidden path at `vertex`
struct ForbiddenPath {
  int vertex = -1;
  std::vector<int> arrows;
  int length() const { return (int)arrows.size(); }
  bool trivial() const { return arrows.empty(); }
};

struct ForbiddenReport {
  bool unbounded = false;  // relation graph has a cycle
  std::vector<ForbiddenPath> maximal_paths;  // only meaningful when bounded
  std::vector<ForbiddenPath> threads;
  std::vector<ForbiddenPath> f1;  // one walk once around each relation-graph cycle
  std::vector<ForbiddenPath> f2;  // maximal off-cycle forbidden paths
};

ForbiddenReport forbidden_structures(const Presentation& pres);

struct HomologicalDims {
  bool gldim_finite = true;
  int gldim = 0;   // valid when finite
  int injdim = 0;
  int sup_f2 = 0;  // cross-check value for injdim
};

HomologicalDims homological_dimensions(const Presentation& pres);

struct DerivedClass {
  bool discrete = true;
  std::optional<Word> witness;  // homotopy band when strongly unbounded
};

DerivedClass derived_class(const Presentation& pres);

}  // namespace stralg
