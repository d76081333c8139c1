#include "doctest.h"

#include <set>

#include "common.hpp"
#include "random_gen.hpp"
#include "stralg/cma.hpp"
#include "stralg/gentle.hpp"
#include "stralg/gproj.hpp"
#include "stralg/oracle.hpp"
#include "stralg/words.hpp"

using namespace stralg;
using namespace testsupport;

namespace {

std::set<std::string> pset(const Presentation& p, const std::vector<Path>& v) {
  std::set<std::string> out;
  for (const Path& x : v) out.insert(fmt(p, x));
  return out;
}

}  // namespace

TEST_CASE("structural properties hold on random string algebras") {
  std::mt19937 rng(20240811);
  const int samples = 200;
  int gentle_seen = 0, gcond_seen = 0, with_perfect = 0;

  for (int s = 0; s < samples; ++s) {
    Presentation p = random_string_algebra(rng);
    CAPTURE(s);
    CAPTURE(emit_dsl(p));

    GProjReport rep = perfect_paths(p);
    if (!rep.cm_free) ++with_perfect;

    // partner uniqueness, exhaustively
    auto nz = nonzero_paths(p);
    for (const Path& x : nz) {
      if (x.trivial()) continue;
      int count = 0;
      for (const Path& q : nz) {
        if (q.trivial() || q.source() != x.target(p.quiver)) continue;
        if (is_perfect_pair(p, x, q).ok) ++count;
      }
      REQUIRE(count <= 1);
    }

    // products along every orbit are literally generators
    std::set<std::string> gens;
    for (const auto& r : p.relations) gens.insert(fmt(p, r.terms[0].path));
    for (const PPS& orbit : rep.orbits)
      for (size_t i = 0; i < orbit.paths.size(); ++i) {
        Path prod = concat(p.quiver, orbit.paths[i],
                           orbit.paths[(i + 1) % orbit.paths.size()]);
        REQUIRE(gens.count(fmt(p, prod)) == 1);
      }

    // route agreement: successor search = relation-cycle route
    std::set<std::string> via_prs;
    for (const auto& cyc : relation_cycles(p))
      for (const auto& e : prs_route(p, cyc))
        for (const Path& x : e.paths) via_prs.insert(fmt(p, x));
    REQUIRE(via_prs == pset(p, rep.perfect_paths));

    // construction properties
    CmaPresentation cma = build_cma(p);
    REQUIRE(cma.diagnostics.empty());
    bool gcond = satisfies_g_condition(p).ok;
    if (gcond) ++gcond_seen;
    REQUIRE(classify(cma.presentation).is_string == gcond);
    if (gcond) {
      REQUIRE(perfect_paths(cma.presentation).cm_free);
      CmaPresentation split = build_cma_split(p);
      REQUIRE(structurally_equal(cma.presentation, split.presentation));
    }
    if (rep.cm_free) REQUIRE(structurally_equal(cma.presentation, p));

    if (classify(p).is_gentle) {
      ++gentle_seen;
      REQUIRE(classify(cma.presentation).is_gentle);

      // finite global dimension exactly without a fully-relational gentle cycle
      HomologicalDims hd = homological_dimensions(p);
      bool full_cycle = false;
      for (const auto& c : relation_cycles(p)) {
        if (!c.gentle) continue;
        bool full = true;
        int n = c.cycle.length();
        for (int i = 0; i < n; ++i) {
          Path window;
          window.base = p.quiver.arrows[c.cycle.arrows[i]].src;
          window.arrows = {c.cycle.arrows[i], c.cycle.arrows[(i + 1) % n]};
          if (!gens.count(fmt(p, window))) full = false;
        }
        if (full) full_cycle = true;
      }
      REQUIRE(hd.gldim_finite == !full_cycle);
      REQUIRE(hd.injdim == hd.sup_f2);

      // forbidden paths touching a fully-relational cycle stay on it: the
      // relation graph of a gentle algebra is a partial permutation
      RelationGraph rg = relation_graph(p);
      for (size_t a = 0; a < rg.out.size(); ++a) {
        REQUIRE(rg.out[a].size() <= 1);
        REQUIRE(rg.in[a].size() <= 1);
      }
    }

    // representation-type transfer under the G-condition
    if (gcond) {
      bool fin_in = is_representation_finite(p).finite;
      bool fin_out = is_representation_finite(cma.presentation).finite;
      REQUIRE(fin_in == fin_out);
    }

    // dual-route dimension agreement on a subsample
    if (s % 5 == 0) {
      VerificationReport vr = verify_cma(cma);
      for (const auto& f : vr.failures) MESSAGE("verify: " << f);
      REQUIRE(vr.pass);
    }
  }

  // the sample stream actually exercises the interesting branches
  CHECK(gentle_seen > 20);
  CHECK(gcond_seen > 20);
  CHECK(with_perfect > 10);
  MESSAGE("gentle=" << gentle_seen << " gcond=" << gcond_seen
                    << " with_perfect=" << with_perfect);
}
