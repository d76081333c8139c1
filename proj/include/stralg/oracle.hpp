#pragma once

#include <string>
#include <vector>

#include "stralg/cma.hpp"
#include "stralg/words.hpp"

namespace stralg {

// dim Hom_A(M, N): rank computation on the intertwiner system
// f_{t(a)} M_a = N_a f_{s(a)}.
int hom_dim(const Presentation& pres, const Representation& M,
            const Representation& N);

// Intertwiner solution space as matrix tuples (one per basis solution).
std::vector<std::vector<Mat>> hom_basis(const Presentation& pres,
                                        const Representation& M,
                                        const Representation& N);

// Exact isomorphism test: random specialization with a deterministic grid
// fallback; never wrong in either direction.
bool rep_iso(const Presentation& pres, const Representation& M,
             const Representation& N);

// dim kQ/I through the completed rewriting system; degree_bound <= 0 picks
// the default 2*|arrows| + max generator length. Errors when the quotient
// cannot be certified finite at the bound.
int algebra_dim(const Presentation& pres, int degree_bound = 0);

// P(v) and pA as explicit representations (basis = nonzero continuations).
Representation projective_rep(const Presentation& pres, int v);
Representation ideal_rep(const Presentation& pres, const Path& p);

struct PairEntry {
  int src = -1;  // CMA vertex indices
  int dst = -1;
  int arrows = 0;
  int homdim = 0;
};

struct VerificationReport {
  long long d1 = 0;  // dim of the emitted CMA presentation
  long long d2 = 0;  // sum of hom dims over ordered pairs of G-projectives
  bool pass = false;
  std::vector<PairEntry> per_pair;
  std::vector<std::string> failures;
};

// Dual-route check: presentation dimension vs endomorphism dimension, plus
// arrow-count bounds and semantic soundness of every emitted generator.
VerificationReport verify_cma(const Presentation& pres, int degree_bound = 0);
VerificationReport verify_cma(const CmaPresentation& cma, int degree_bound = 0);

}  // namespace stralg
