#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stralg/io.hpp"
#include "stralg/parser.hpp"

using namespace stralg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string input;
  std::string format = "text";
  std::string output;
  int max_len = -1;
  int degree_bound = 0;
};

void write_out(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opt.output);
    if (!out) throw Error("cannot open output file '" + opt.output + "'");
    out << text;
  }
}

void emit_json(const Options& opt, const json& j) { write_out(opt, j.dump(2)); }

int run_validate(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  std::ostringstream out;
  out << "ok: " << pres.quiver.vertices.size() << " vertices, "
      << pres.quiver.arrows.size() << " arrows, " << pres.relations.size()
      << " relations";
  if (pres.is_monomial())
    out << ", dim " << nonzero_paths(pres).size();
  out << "\n";
  if (opt.format == "json") {
    json j = presentation_json(pres);
    if (pres.is_monomial()) j["dim"] = nonzero_paths(pres).size();
    emit_json(opt, j);
  } else {
    write_out(opt, out.str());
  }
  return 0;
}

int run_classify(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  StructureReport rep = classify(pres);
  if (opt.format == "json") {
    emit_json(opt, structure_json(rep));
    return 0;
  }
  std::ostringstream out;
  out << "monomial: " << (rep.is_monomial ? "yes" : "no") << "\n"
      << "string:   " << (rep.is_string ? "yes" : "no") << "\n"
      << "gentle:   " << (rep.is_gentle ? "yes" : "no") << "\n";
  for (const auto& v : rep.violations) out << "violation: " << v << "\n";
  write_out(opt, out.str());
  return 0;
}

int run_strings(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  std::vector<Word> words;
  if (opt.max_len >= 0) {
    words = enumerate_strings(pres, opt.max_len);
  } else {
    RepType rt = is_representation_finite(pres);
    if (!rt.finite)
      throw Error("representation-infinite algebra; pass --max-len");
    words = enumerate_all_strings(pres);
  }
  if (opt.format == "json") {
    emit_json(opt, words_json(pres, words));
    return 0;
  }
  std::ostringstream out;
  for (const Word& w : words) out << format_word(pres.quiver, w) << "\n";
  out << words.size() << " strings\n";
  write_out(opt, out.str());
  return 0;
}

int run_reptype(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  RepType rt = is_representation_finite(pres);
  if (opt.format == "json") {
    emit_json(opt, reptype_json(pres, rt));
    return 0;
  }
  std::ostringstream out;
  if (rt.finite) {
    out << "representation-finite\n";
  } else {
    out << "representation-infinite";
    if (rt.witness) {
      out << ", witness " << format_word(pres.quiver, *rt.witness);
      out << (rt.witness_is_band ? " (band)" : " (" + rt.note + ")");
    }
    out << "\n";
  }
  write_out(opt, out.str());
  return 0;
}

int run_gproj(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  GProjReport rep = perfect_paths(pres);
  if (opt.format == "json") {
    emit_json(opt, gproj_json(pres, rep));
    return 0;
  }
  std::ostringstream out;
  out << "perfect paths (" << rep.perfect_paths.size() << "):";
  for (const Path& p : rep.perfect_paths) out << " " << format_path(pres.quiver, p);
  out << "\norbits:\n";
  for (const PPS& o : rep.orbits) {
    out << "  (";
    for (size_t i = 0; i < o.paths.size(); ++i)
      out << (i ? ", " : "") << format_path(pres.quiver, o.paths[i]);
    out << ")\n";
  }
  out << "G-projectives: " << rep.objects.size() << " ("
      << pres.quiver.vertices.size() << " projective, "
      << rep.perfect_paths.size() << " nontrivial)\n";
  out << "CM-free: " << (rep.cm_free ? "yes" : "no") << "\n";
  write_out(opt, out.str());
  return 0;
}

int run_cma(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  CmaPresentation cma = build_cma(pres);
  if (opt.format == "dsl") {
    write_out(opt, emit_dsl(cma.presentation));
  } else if (opt.format == "json") {
    emit_json(opt, cma_json(cma));
  } else if (opt.format == "dot") {
    write_out(opt, presentation_dot(cma.presentation));
  } else {
    std::ostringstream out;
    out << cma.presentation.quiver.vertices.size() << " vertices, "
        << cma.presentation.quiver.arrows.size() << " arrows, "
        << cma.presentation.relations.size() << " relations\n"
        << emit_dsl(cma.presentation);
    write_out(opt, out.str());
  }
  return 0;
}

int run_dims(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  HomologicalDims hd = homological_dimensions(pres);
  ForbiddenReport fr = forbidden_structures(pres);
  if (opt.format == "json") {
    emit_json(opt, dims_json(pres, hd, fr));
    return 0;
  }
  std::ostringstream out;
  out << "gl.dim = "
      << (hd.gldim_finite ? std::to_string(hd.gldim) : std::string("infinity"))
      << ", inj.dim = " << hd.injdim << "\n";
  write_out(opt, out.str());
  return 0;
}

int run_derived(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  DerivedClass dc = derived_class(pres);
  if (opt.format == "json") {
    emit_json(opt, derived_json(pres, dc));
    return 0;
  }
  std::ostringstream out;
  out << (dc.discrete ? "derived discrete" : "strongly derived unbounded");
  if (dc.witness)
    out << ", homotopy band " << format_word(pres.quiver, *dc.witness);
  out << "\n";
  write_out(opt, out.str());
  return 0;
}

int run_verify(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  CmaPresentation cma = build_cma(pres);
  VerificationReport vr = verify_cma(cma, opt.degree_bound);
  if (opt.format == "json") {
    emit_json(opt, verification_json(cma, vr));
    return vr.pass ? 0 : 1;
  }
  std::ostringstream out;
  out << (vr.pass ? "pass" : "FAIL") << ": D1 = " << vr.d1 << ", D2 = " << vr.d2
      << "\n";
  for (const auto& f : vr.failures) out << "failure: " << f << "\n";
  write_out(opt, out.str());
  return vr.pass ? 0 : 1;
}

int run_export(const Options& opt) {
  Presentation pres = parse_presentation(read_file(opt.input));
  if (opt.format == "json")
    emit_json(opt, presentation_json(pres));
  else if (opt.format == "dot")
    write_out(opt, presentation_dot(pres));
  else
    write_out(opt, emit_dsl(pres));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound-quiver toolkit for string algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_maxlen = false,
                        bool with_degree = false) {
    sub->add_option("input", opt.input, "input DSL file")->required();
    sub->add_option("--format", opt.format, "text|json|dsl|dot");
    sub->add_option("--output", opt.output, "write to file instead of stdout");
    if (with_maxlen) sub->add_option("--max-len", opt.max_len, "string length bound");
    if (with_degree)
      sub->add_option("--degree-bound", opt.degree_bound, "dimension degree bound");
  };

  add_common(app.add_subcommand("validate", "parse and validate a presentation"));
  add_common(app.add_subcommand("classify", "string/gentle classification"));
  add_common(app.add_subcommand("strings", "enumerate strings"), true);
  add_common(app.add_subcommand("reptype", "representation type"));
  add_common(app.add_subcommand("gproj", "Gorenstein-projective modules"));
  add_common(app.add_subcommand("cma", "CM-Auslander algebra presentation"));
  add_common(app.add_subcommand("dims", "homological dimensions (gentle)"));
  add_common(app.add_subcommand("derived", "derived-type class (gentle)"));
  add_common(app.add_subcommand("verify", "dual-route CMA verification"), false, true);
  add_common(app.add_subcommand("export", "convert a presentation"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("validate")) return run_validate(opt);
    if (app.got_subcommand("classify")) return run_classify(opt);
    if (app.got_subcommand("strings")) return run_strings(opt);
    if (app.got_subcommand("reptype")) return run_reptype(opt);
    if (app.got_subcommand("gproj")) return run_gproj(opt);
    if (app.got_subcommand("cma")) return run_cma(opt);
    if (app.got_subcommand("dims")) return run_dims(opt);
    if (app.got_subcommand("derived")) return run_derived(opt);
    if (app.got_subcommand("verify")) return run_verify(opt);
    if (app.got_subcommand("export")) return run_export(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
