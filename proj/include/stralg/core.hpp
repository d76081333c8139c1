#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/quiver.hpp"

namespace stralg {

struct StructureReport {
  bool is_monomial = false;
  bool is_string = false;
  bool is_gentle = false;
  std::vector<std::string> violations;
};

// String/gentle classification. Reports, never throws, on valid inputs.
StructureReport classify(const Presentation& pres);

// All paths (including trivial) avoiding every monomial generator, ordered by
// (length, lexicographic arrow names). Size = dim of the algebra.
std::vector<Path> nonzero_paths(const Presentation& pres);

struct OverlapResult {
  Path meet;  // p ⊓ q
  Path join;  // p ⊔ q
};

// Alignments i with q = p[i..) extended beyond p's end: q matches p's suffix
// starting at offset i and reaches at least p's end (0 <= i < len(p),
// len(p) <= i + len(q)).
std::vector<int> overlap_offsets(const Quiver& q, const Path& p, const Path& r);
OverlapResult overlap_at(const Quiver& q, const Path& p, const Path& r, int offset);
// Unique alignment required; throws listing all alignments when ambiguous.
OverlapResult overlap(const Quiver& q, const Path& p, const Path& r);

struct PositionedGenerator {
  int relation = -1;  // index into pres.relations
  int offset = 0;     // start position on the cycle
  int wraps = 0;      // number of times the generator passes the cycle start
};

struct RelationCycle {
  Path cycle;  // oriented, pairwise-distinct arrows, source = target
  std::vector<PositionedGenerator> generators;
  bool gentle = false;
};

// Every oriented arrow-distinct cycle covered by a cyclic chain of
// overlapping-or-abutting positioned generators, with all generators that
// read off the cycle. Gentle flag: all positioned generators have length 2.
std::vector<RelationCycle> relation_cycles(const Presentation& pres);

// Does `p` read off `cycle` starting at `offset` (cyclically)?
bool reads_off_cycle(const Quiver& q, const Path& cycle, const Path& p, int offset);

}  // namespace stralg
