#include "stralg/parser.hpp"

#include <sstream>
#include <vector>

namespace stralg {

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !std::isspace((unsigned char)line[j]) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

Path parse_rel_path(const Presentation& pres, const std::string& text,
                    int lineno, int col) {
  std::vector<int> arrows;
  size_t start = 0;
  while (start <= text.size()) {
    size_t dot = text.find('.', start);
    std::string name = text.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (name.empty())
      throw ParseError("empty arrow name in relation path", lineno, col);
    int a = pres.quiver.arrow_index(name);
    if (a < 0)
      throw ParseError("unknown arrow '" + name + "' in relation", lineno, col);
    arrows.push_back(a);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  try {
    return make_path(pres.quiver, arrows);
  } catch (const Error& e) {
    throw ParseError(e.what(), lineno, col);
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation pres;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "vertices") {
      if (toks.size() < 2)
        throw ParseError("'vertices' needs at least one id", lineno, toks[0].col);
      for (size_t i = 1; i < toks.size(); ++i) {
        try {
          pres.quiver.add_vertex(toks[i].text);
        } catch (const Error& e) {
          throw ParseError(e.what(), lineno, toks[i].col);
        }
      }
    } else if (kw == "arrow") {
      // arrow <name>: <src> -> <dst>   (':' may be glued to the name)
      std::vector<std::string> parts;
      std::vector<int> cols;
      for (size_t i = 1; i < toks.size(); ++i) {
        std::string t = toks[i].text;
        size_t colon = t.find(':');
        if (colon != std::string::npos && t != ":") {
          if (colon > 0) {
            parts.push_back(t.substr(0, colon));
            cols.push_back(toks[i].col);
          }
          parts.push_back(":");
          cols.push_back(toks[i].col + (int)colon);
          if (colon + 1 < t.size()) {
            parts.push_back(t.substr(colon + 1));
            cols.push_back(toks[i].col + (int)colon + 1);
          }
        } else {
          parts.push_back(t);
          cols.push_back(toks[i].col);
        }
      }
      if (parts.size() != 5 || parts[1] != ":" || parts[3] != "->")
        throw ParseError("expected 'arrow <name>: <src> -> <dst>'", lineno,
                         toks[0].col);
      int src = pres.quiver.vertex_index(parts[2]);
      if (src < 0)
        throw ParseError("unknown vertex '" + parts[2] + "'", lineno, cols[2]);
      int dst = pres.quiver.vertex_index(parts[4]);
      if (dst < 0)
        throw ParseError("unknown vertex '" + parts[4] + "'", lineno, cols[4]);
      try {
        pres.quiver.add_arrow(parts[0], src, dst);
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, cols[0]);
      }
    } else if (kw == "rel") {
      if (toks.size() == 2) {
        Relation r;
        r.terms.push_back({1, parse_rel_path(pres, toks[1].text, lineno, toks[1].col)});
        if (r.terms[0].path.length() < 2)
          throw ParseError("monomial generator '" + toks[1].text +
                               "' has length < 2",
                           lineno, toks[1].col);
        pres.relations.push_back(std::move(r));
      } else if (toks.size() == 4 && toks[2].text == "=") {
        Relation r;
        r.terms.push_back({1, parse_rel_path(pres, toks[1].text, lineno, toks[1].col)});
        r.terms.push_back({-1, parse_rel_path(pres, toks[3].text, lineno, toks[3].col)});
        const Path& p1 = r.terms[0].path;
        const Path& p2 = r.terms[1].path;
        if (p1.source() != p2.source() ||
            p1.target(pres.quiver) != p2.target(pres.quiver))
          throw ParseError("binomial relation terms are not parallel", lineno,
                           toks[1].col);
        pres.relations.push_back(std::move(r));
      } else {
        throw ParseError("expected 'rel <path>' or 'rel <path> = <path>'",
                         lineno, toks[0].col);
      }
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno, toks[0].col);
    }
  }
  try {
    validate(pres);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), lineno, 1);
  }
  return pres;
}

static std::string rel_path_text(const Quiver& q, const Path& p) {
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

std::string emit_dsl(const Presentation& pres) {
  std::ostringstream out;
  out << "vertices";
  for (const auto& v : pres.quiver.vertices) out << ' ' << v;
  out << '\n';
  for (const auto& a : pres.quiver.arrows)
    out << "arrow " << a.name << ": " << pres.quiver.vertices[a.src] << " -> "
        << pres.quiver.vertices[a.dst] << '\n';
  for (const auto& r : pres.relations) {
    if (r.monomial()) {
      out << "rel " << rel_path_text(pres.quiver, r.terms[0].path) << '\n';
    } else {
      const RelTerm& pos = r.terms[0].coeff == 1 ? r.terms[0] : r.terms[1];
      const RelTerm& neg = r.terms[0].coeff == 1 ? r.terms[1] : r.terms[0];
      out << "rel " << rel_path_text(pres.quiver, pos.path) << " = "
          << rel_path_text(pres.quiver, neg.path) << '\n';
    }
  }
  return out.str();
}

}  // namespace stralg
