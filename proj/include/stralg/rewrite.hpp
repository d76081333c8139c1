#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stralg/quiver.hpp"
#include "stralg/rational.hpp"

namespace stralg {

// Length-lex on arrow index sequences, largest first (leading term order).
struct PathLenLexGreater {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    if (a.arrows != b.arrows) return a.arrows > b.arrows;
    return a.base > b.base;
  }
};

using LinComb = std::map<Path, Rat, PathLenLexGreater>;

LinComb lincomb_of(const Relation& r);

// Two-sided rewriting system for kQ / <relations>, completed by Buchberger
// overlap resolution. The term order is admissible (length-lex), so
// reduction terminates; completion terminates on finite-dimensional
// quotients and trips the rule/length guards otherwise.
class PathRewriter {
 public:
  PathRewriter(const Quiver& q, int max_lm_len, int max_rules = 20000);

  void add(const LinComb& rel);
  void add(const Relation& r) { add(lincomb_of(r)); }

  LinComb normal_form(LinComb x) const;
  bool reduces_to_zero(const LinComb& x) const;
  bool reduces_to_zero(const Path& p) const;

  // Paths irreducible by the system, in increasing (length, index-lex)
  // order. nullopt when some normal monomial reaches max_len (the quotient
  // cannot be certified finite at this bound) or count_limit is exceeded.
  std::optional<std::vector<Path>> normal_monomials(int max_len,
                                                    long long count_limit) const;

 private:
  struct Rule {
    Path lm;
    LinComb tail;  // lm ≡ tail mod ideal; every tail term < lm
  };

  bool reducible_ending_at(const std::vector<int>& arrows, int end_vertex_if_trivial) const;
  void complete();

  const Quiver& quiver_;
  int max_lm_len_;
  int max_rules_;
  std::vector<Rule> rules_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace stralg
