#include "stralg/io.hpp"

#include <sstream>

namespace stralg {

static json path_json(const Quiver& q, const Path& p) {
  json arr = json::array();
  for (int a : p.arrows) arr.push_back(q.arrows[a].name);
  return arr;
}

json presentation_json(const Presentation& pres) {
  const Quiver& q = pres.quiver;
  json j;
  j["vertices"] = json::array();
  for (size_t v = 0; v < q.vertices.size(); ++v)
    j["vertices"].push_back(
        {{"id", q.vertices[v]},
         {"kind", pres.kind((int)v) == VertexKind::GProj ? "gproj" : "original"}});
  j["arrows"] = json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"name", a.name},
                           {"src", q.vertices[a.src]},
                           {"dst", q.vertices[a.dst]}});
  j["relations"] = json::array();
  for (const auto& r : pres.relations) {
    json terms = json::array();
    for (const auto& t : r.terms)
      terms.push_back({{"coeff", t.coeff}, {"path", path_json(q, t.path)}});
    j["relations"].push_back({{"terms", terms}});
  }
  return j;
}

json cma_json(const CmaPresentation& cma) {
  json j = presentation_json(cma.presentation);
  json vm = json::array();
  for (size_t v = 0; v < cma.objects.size(); ++v) {
    const auto& o = cma.objects[v];
    json obj;
    if (o.gproj) {
      obj["kind"] = "nontrivial";
      obj["path"] = path_json(cma.source.quiver, o.path);
    } else {
      obj["kind"] = "projective";
      obj["vertex"] = cma.source.quiver.vertices[o.original_vertex];
    }
    vm.push_back({{"object", obj},
                  {"vertex", cma.presentation.quiver.vertices[v]}});
  }
  j["vertex_map"] = vm;
  json labels = json::array();
  for (size_t a = 0; a < cma.arrow_labels.size(); ++a)
    labels.push_back({{"arrow", cma.presentation.quiver.arrows[a].name},
                      {"label", format_path(cma.source.quiver, cma.arrow_labels[a])}});
  j["arrow_labels"] = labels;
  if (!cma.diagnostics.empty()) j["diagnostics"] = cma.diagnostics;
  return j;
}

json representation_json(const Presentation& pres, const Representation& rep) {
  const Quiver& q = pres.quiver;
  json dims;
  for (size_t v = 0; v < q.vertices.size(); ++v)
    dims[q.vertices[v]] = rep.dims[v];
  json mats;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    json m = json::array();
    for (const auto& row : rep.matrices[a]) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      m.push_back(r);
    }
    mats[q.arrows[a].name] = m;
  }
  return {{"dims", dims}, {"matrices", mats}};
}

json structure_json(const StructureReport& rep) {
  return {{"is_monomial", rep.is_monomial},
          {"is_string", rep.is_string},
          {"is_gentle", rep.is_gentle},
          {"violations", rep.violations}};
}

json gproj_json(const Presentation& pres, const GProjReport& rep) {
  const Quiver& q = pres.quiver;
  json j;
  j["perfect_paths"] = json::array();
  for (const Path& p : rep.perfect_paths)
    j["perfect_paths"].push_back(format_path(q, p));
  j["orbits"] = json::array();
  for (const PPS& o : rep.orbits) {
    json orb = json::array();
    for (const Path& p : o.paths) orb.push_back(format_path(q, p));
    j["orbits"].push_back(orb);
  }
  j["gproj"] = json::array();
  for (const GProjObject& o : rep.objects) {
    json e;
    e["kind"] = o.projective ? "projective" : "nontrivial";
    if (o.projective)
      e["vertex"] = q.vertices[o.vertex];
    else {
      e["path"] = format_path(q, o.path);
      e["string"] = format_word(q, o.word);
    }
    json dv;
    for (size_t v = 0; v < q.vertices.size(); ++v)
      dv[q.vertices[v]] = o.dimvec[v];
    e["dimvec"] = dv;
    j["gproj"].push_back(e);
  }
  j["cm_free"] = rep.cm_free;
  j["cm_finite"] = rep.cm_finite;
  return j;
}

json reptype_json(const Presentation& pres, const RepType& rt) {
  json j;
  j["finite"] = rt.finite;
  if (rt.witness) {
    j["witness"] = format_word(pres.quiver, *rt.witness);
    j["witness_is_band"] = rt.witness_is_band;
  }
  if (!rt.note.empty()) j["note"] = rt.note;
  return j;
}

json words_json(const Presentation& pres, const std::vector<Word>& words) {
  json arr = json::array();
  for (const Word& w : words) arr.push_back(format_word(pres.quiver, w));
  return {{"count", words.size()}, {"strings", arr}};
}

static json forbidden_json(const Presentation& pres, const ForbiddenPath& f) {
  const Quiver& q = pres.quiver;
  if (f.trivial()) return {{"trivial_at", q.vertices[f.vertex]}, {"length", 0}};
  std::string s;
  for (size_t i = 0; i < f.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrows[f.arrows[i]].name;
  }
  return {{"path", s}, {"length", f.length()}};
}

json dims_json(const Presentation& pres, const HomologicalDims& hd,
               const ForbiddenReport& fr) {
  json j;
  if (hd.gldim_finite)
    j["gldim"] = hd.gldim;
  else
    j["gldim"] = "infinity";
  j["injdim"] = hd.injdim;
  j["sup_f2"] = hd.sup_f2;
  j["threads"] = json::array();
  for (const auto& f : fr.threads) j["threads"].push_back(forbidden_json(pres, f));
  j["f1"] = json::array();
  for (const auto& f : fr.f1) j["f1"].push_back(forbidden_json(pres, f));
  j["f2"] = json::array();
  for (const auto& f : fr.f2) j["f2"].push_back(forbidden_json(pres, f));
  j["unbounded_forbidden_paths"] = fr.unbounded;
  return j;
}

json derived_json(const Presentation& pres, const DerivedClass& dc) {
  json j;
  j["class"] = dc.discrete ? "discrete" : "strongly_unbounded";
  if (dc.witness) j["witness"] = format_word(pres.quiver, *dc.witness);
  return j;
}

json verification_json(const CmaPresentation& cma, const VerificationReport& vr) {
  json j;
  j["d1"] = vr.d1;
  j["d2"] = vr.d2;
  j["pass"] = vr.pass;
  json pp = json::array();
  for (const auto& e : vr.per_pair)
    pp.push_back({{"i", cma.presentation.quiver.vertices[e.src]},
                  {"j", cma.presentation.quiver.vertices[e.dst]},
                  {"arrows", e.arrows},
                  {"homdim", e.homdim}});
  j["per_pair"] = pp;
  j["failures"] = vr.failures;
  return j;
}

static std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string presentation_dot(const Presentation& pres) {
  const Quiver& q = pres.quiver;
  std::ostringstream out;
  out << "digraph quiver {\n  rankdir=LR;\n";
  for (size_t v = 0; v < q.vertices.size(); ++v) {
    out << "  " << dot_quote(q.vertices[v]);
    if (pres.kind((int)v) == VertexKind::GProj)
      out << " [shape=box, style=filled, fillcolor=lightgrey]";
    out << ";\n";
  }
  for (const auto& a : q.arrows)
    out << "  " << dot_quote(q.vertices[a.src]) << " -> "
        << dot_quote(q.vertices[a.dst]) << " [label=" << dot_quote(a.name)
        << "];\n";
  for (const auto& r : pres.relations) {
    out << "  // rel";
    for (size_t t = 0; t < r.terms.size(); ++t) {
      if (t) out << " =";
      out << " ";
      for (size_t i = 0; i < r.terms[t].path.arrows.size(); ++i) {
        if (i) out << ".";
        out << q.arrows[r.terms[t].path.arrows[i]].name;
      }
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stralg
