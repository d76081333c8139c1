#include "stralg/rewrite.hpp"

#include <algorithm>

namespace stralg {

LinComb lincomb_of(const Relation& r) {
  LinComb c;
  for (const auto& t : r.terms) c[t.path] += Rat(t.coeff);
  for (auto it = c.begin(); it != c.end();)
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
  return c;
}

PathRewriter::PathRewriter(const Quiver& q, int max_lm_len, int max_rules)
    : quiver_(q), max_lm_len_(max_lm_len), max_rules_(max_rules) {}

namespace {

// first position of needle inside haystack, -1 if absent
int find_sub(const std::vector<int>& haystack, const std::vector<int>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return -1;
  for (size_t i = 0; i + needle.size() <= haystack.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + i))
      return (int)i;
  return -1;
}

Path splice(const Quiver& q, const Path& outer, int from, int len, const Path& mid) {
  // outer with arrows [from, from+len) replaced by mid
  std::vector<int> arrows(outer.arrows.begin(), outer.arrows.begin() + from);
  arrows.insert(arrows.end(), mid.arrows.begin(), mid.arrows.end());
  arrows.insert(arrows.end(), outer.arrows.begin() + from + len, outer.arrows.end());
  if (arrows.empty()) return trivial_path(outer.base);
  return make_path(q, arrows);
}

}  // namespace

LinComb PathRewriter::normal_form(LinComb x) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = x.begin(); it != x.end(); ++it) {
      const Path& p = it->first;
      for (const Rule& r : rules_) {
        int pos = find_sub(p.arrows, r.lm.arrows);
        if (pos < 0) continue;
        Rat c = it->second;
        Path target = p;
        x.erase(it);
        for (const auto& [t, tc] : r.tail) {
          Path repl = splice(quiver_, target, pos, r.lm.length(), t);
          Rat& slot = x[repl];
          slot += c * tc;
          if (slot.is_zero()) x.erase(repl);
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return x;
}

bool PathRewriter::reduces_to_zero(const LinComb& x) const {
  return normal_form(x).empty();
}

bool PathRewriter::reduces_to_zero(const Path& p) const {
  LinComb c;
  c[p] = Rat(1);
  return reduces_to_zero(c);
}

void PathRewriter::add(const LinComb& rel) {
  LinComb nf = normal_form(rel);
  if (nf.empty()) return;
  Rule r;
  r.lm = nf.begin()->first;
  if (r.lm.length() > max_lm_len_)
    throw Error("rewriting leading term exceeds the degree bound " +
                std::to_string(max_lm_len_) +
                " (truncation not closed; raise --degree-bound)");
  Rat lead = nf.begin()->second;
  for (auto it = std::next(nf.begin()); it != nf.end(); ++it)
    r.tail[it->first] = -(it->second / lead);
  rules_.push_back(std::move(r));
  if ((int)rules_.size() > max_rules_)
    throw Error("rewriting system exceeded the rule limit (non-admissible input?)");
  int k = (int)rules_.size() - 1;
  for (int i = 0; i <= k; ++i) pending_.push_back({i, k});
  for (int i = 0; i < k; ++i) pending_.push_back({k, i});
  complete();
}

void PathRewriter::complete() {
  while (!pending_.empty()) {
    auto [i, j] = pending_.back();
    pending_.pop_back();
    if (i >= (int)rules_.size() || j >= (int)rules_.size()) continue;
    const Path lm1 = rules_[i].lm;
    const Path lm2 = rules_[j].lm;
    std::vector<LinComb> sps;

    // true overlap: proper suffix of lm1 = proper prefix of lm2
    // (inclusions, lm1 prefix of lm2 included, surface via the inclusion
    // branch of this pair or of the mirrored pair)
    for (int h = 1; h < std::min(lm1.length(), lm2.length()); ++h) {
      if (!std::equal(lm1.arrows.end() - h, lm1.arrows.end(), lm2.arrows.begin()))
        continue;
      // amb = lm1 · lm2[h..] ; S = tail1 · lm2[h..] - lm1[..-h] · lm2->tail
      std::vector<int> right(lm2.arrows.begin() + h, lm2.arrows.end());
      std::vector<int> left(lm1.arrows.begin(), lm1.arrows.end() - h);
      LinComb s;
      for (const auto& [t, c] : rules_[i].tail) {
        std::vector<int> arr = t.arrows;
        arr.insert(arr.end(), right.begin(), right.end());
        Path p = arr.empty() ? trivial_path(lm1.base) : make_path(quiver_, arr);
        s[p] += c;
      }
      for (const auto& [t, c] : rules_[j].tail) {
        std::vector<int> arr = left;
        arr.insert(arr.end(), t.arrows.begin(), t.arrows.end());
        Path p = arr.empty() ? trivial_path(lm1.base) : make_path(quiver_, arr);
        s[p] -= c;
      }
      for (auto it = s.begin(); it != s.end();)
        it = it->second.is_zero() ? s.erase(it) : std::next(it);
      sps.push_back(std::move(s));
    }

    // inclusion: lm2 properly inside lm1
    if (i != j && lm2.length() < lm1.length()) {
      for (int pos = 0; pos + lm2.length() <= lm1.length(); ++pos) {
        if (!std::equal(lm2.arrows.begin(), lm2.arrows.end(),
                        lm1.arrows.begin() + pos))
          continue;
        LinComb s;
        for (const auto& [t, c] : rules_[i].tail) s[t] += c;
        for (const auto& [t, c] : rules_[j].tail) {
          Path repl = splice(quiver_, lm1, pos, lm2.length(), t);
          s[repl] -= c;
        }
        for (auto it = s.begin(); it != s.end();)
          it = it->second.is_zero() ? s.erase(it) : std::next(it);
        sps.push_back(std::move(s));
      }
    }

    for (const LinComb& s : sps) {
      LinComb nf = normal_form(s);
      if (!nf.empty()) {
        // re-add as a rule; add() queues new pairs and recurses into
        // complete(), which drains the shared queue
        add(nf);
      }
    }
  }
}

bool PathRewriter::reducible_ending_at(const std::vector<int>& arrows, int) const {
  for (const Rule& r : rules_) {
    int len = r.lm.length();
    if (len > (int)arrows.size()) continue;
    if (std::equal(r.lm.arrows.begin(), r.lm.arrows.end(),
                   arrows.end() - len))
      return true;
  }
  return false;
}

std::optional<std::vector<Path>> PathRewriter::normal_monomials(
    int max_len, long long count_limit) const {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (int v = 0; v < (int)quiver_.vertices.size(); ++v) {
    out.push_back(trivial_path(v));
    frontier.push_back(trivial_path(v));
  }
  for (int len = 1; !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int a : quiver_.arrows_from(p.target(quiver_))) {
        Path ext = p;
        ext.arrows.push_back(a);
        // prefix is normal, so only a suffix match can make ext reducible
        if (reducible_ending_at(ext.arrows, -1)) continue;
        if (len >= max_len) return std::nullopt;  // not closed at this bound
        next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end(),
              [&](const Path& a, const Path& b) { return path_less(quiver_, a, b); });
    out.insert(out.end(), next.begin(), next.end());
    if ((long long)out.size() > count_limit) return std::nullopt;
    frontier = std::move(next);
  }
  return out;
}

}  // namespace stralg
