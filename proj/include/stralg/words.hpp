#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stralg/matrix.hpp"
#include "stralg/quiver.hpp"

namespace stralg {

struct Letter {
  int arrow = -1;
  bool direct = true;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.arrow == b.arrow && a.direct == b.direct;
  }
};

// A walk: sequence of direct/inverse letters, or the trivial walk at `base`.
struct Word {
  int base = -1;  // source vertex
  std::vector<Letter> letters;

  bool trivial() const { return letters.empty(); }
  int length() const { return (int)letters.size(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.base == b.base && a.letters == b.letters;
  }
};

int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);
int word_target(const Quiver& q, const Word& w);
Word inverse_word(const Quiver& q, const Word& w);
Word rotate_word(const Quiver& q, const Word& w, int k);

std::string format_word(const Quiver& q, const Word& w);  // "a.b^-1.c", "e_1"
Word parse_word(const Quiver& q, const std::string& text);

bool word_less(const Quiver& q, const Word& a, const Word& b);
// Lexicographic minimum of {w, w^-1}.
Word canonical_string(const Quiver& q, const Word& w);
// Minimum over all rotations of w and of w^-1.
Word canonical_band(const Quiver& q, const Word& w);

// Direct validity checks on the Word invariants (composition, reducedness,
// maximal runs avoid the ideal).
bool is_string_word(const Presentation& pres, const Word& w,
                    std::string* why = nullptr);

// Walk automaton: states are (last letter, relation-progress buffer), the
// buffer being the longest suffix of the current unidirectional run that is
// a proper prefix of a generator (direct) or reversed generator (inverse).
class StringAutomaton {
 public:
  explicit StringAutomaton(const Presentation& pres);

  bool accepts(const Word& w) const;
  bool has_cycle() const;
  // A cyclic word along an automaton cycle, mixed-direction preferred;
  // nullopt when the automaton is acyclic.
  std::optional<Word> cycle_witness() const;
  // Length of the longest accepted word; requires acyclicity.
  int longest_word() const;

  int state_count() const { return (int)letters_.size(); }

 private:
  int step(int state, const Letter& next) const;  // -1 when illegal
  int initial_state(const Letter& l) const;       // -1 when illegal

  const Presentation* pres_;
  std::vector<Letter> letters_;                  // per state
  std::vector<std::vector<int>> buffers_;        // per state
  std::map<std::pair<std::pair<int, bool>, std::vector<int>>, int> index_;
  std::vector<std::vector<std::pair<Letter, int>>> edges_;
  std::vector<int> initial_;
};

// All strings of length <= max_len, one canonical representative per
// equivalence class w ~ w^-1, including trivial words.
std::vector<Word> enumerate_strings(const Presentation& pres, int max_len);
// Full census; throws when the algebra is representation-infinite.
std::vector<Word> enumerate_all_strings(const Presentation& pres);

// Per-vertex dims and per-arrow matrices of shape dim(t(a)) x dim(s(a)).
struct Representation {
  std::vector<int> dims;
  std::vector<Mat> matrices;  // per arrow
};

// Matrix of the action of a path (product along its arrows).
Mat path_action(const Quiver& q, const Representation& rep, const Path& p);
// Do all relation identities hold (monomial products vanish, binomial
// products agree)?
bool representation_satisfies(const Presentation& pres, const Representation& rep);

Representation string_module(const Presentation& pres, const Word& w);
Representation band_module(const Presentation& pres, const Word& b,
                           const Rat& eigenvalue, int size);

struct RepType {
  bool finite = false;
  std::optional<Word> witness;
  bool witness_is_band = false;
  std::string note;
};
RepType is_representation_finite(const Presentation& pres);

// The maximal direct word q with p·q nonzero; M(q) is isomorphic to the
// right ideal pA.
Word cyclic_module_string(const Presentation& pres, const Path& p);

}  // namespace stralg
