#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/gproj.hpp"
#include "stralg/quiver.hpp"

namespace stralg {

struct CmaVertexInfo {
  bool gproj = false;
  int original_vertex = -1;  // original case
  Path path;                 // gproj case: the perfect path, in the source quiver
};

// Presentation of the CM-Auslander algebra together with the labelled
// morphism data: every arrow i -> j denotes a morphism G_j -> G_i sending
// the generator g_j to g_i · label.
struct CmaPresentation {
  Presentation source;
  Presentation presentation;
  std::vector<CmaVertexInfo> objects;  // per CMA vertex
  std::vector<Path> arrow_labels;      // per CMA arrow, path in the source quiver
  std::vector<std::string> diagnostics;
};

// Construction along the G-projective layer structure: split arrows for
// length-1 perfect paths, attachment arrows for longer ones, relations in
// three families (starified generators, commutativity squares, reduced
// minimal zero composites).
CmaPresentation build_cma(const Presentation& pres);

// Arrow-splitting shortcut, valid exactly under the G-condition; output is
// structurally equal to build_cma(pres).
CmaPresentation build_cma_split(const Presentation& pres);

// Value g_i · W(pi) of a CMA path in the source algebra; nullopt = zero.
std::optional<Path> evaluate_cma_path(const CmaPresentation& cma, const Path& cma_path);

}  // namespace stralg
