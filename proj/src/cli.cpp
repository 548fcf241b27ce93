#include "zonocert/cli.hpp"
#include "zonocert/corpus.hpp"
#include "zonocert/export.hpp"
#include "zonocert/json_io.hpp"
#include "zonocert/parallelohedron.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace zonocert::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string usage() {
  std::string s = "usage: zonocert <verb> [input|-] [-o output|-] [options]\nverbs:";
  for (const char* v : kVerbs) s += std::string(" ") + v;
  return s + "\n";
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) throw UsageError("cannot write output file " + path);
}

bool is_zonotope_doc(const Json& j) { return j.is_object() && j.contains("generators") && !j.contains("normals"); }

Zonotope zonotope_input(const Json& j) {
  return is_zonotope_doc(j) ? zonotope_from_json(j) : dv_zonotope(normal_set_from_json(j));
}

// Stage reported for domain errors raised outside the certification pipeline.
std::string verb_stage(const std::string& verb) {
  if (verb == "edges") return "edge-set";
  if (verb == "facets" || verb == "venkov") return "zonotope";
  return verb;
}

std::string execute(const Command& c, const Json& input, int& status) {
  status = kOk;
  const std::string& v = c.verb;
  if (v == "edges") return dump(to_json(compute_edge_set(normal_set_from_json(input))));
  if (v == "lattice") return dump(to_json(lattice_of_dicing(normal_set_from_json(input))));
  if (v == "zonotope") return dump(to_json(dv_zonotope(normal_set_from_json(input))));
  if (v == "facets") {
    Zonotope z = zonotope_input(input);
    return dump(to_json(facets(z), z.dimension()));
  }
  if (v == "venkov") return dump(to_json(venkov_check(zonotope_input(input))));
  if (v == "dv-cell") {
    NormalSet ns = normal_set_from_json(input);
    DvCell cell = dv_cell_oracle(lattice_of_dicing(ns), quadratic_form(ns), c.multiplier);
    Json j = to_json(cell);
    j["delone"] = to_json(delone_duality_check(ns, c.multiplier));
    return dump(j);
  }
  if (v == "certify") {
    VoronoiCertificate cert = certify_second_voronoi(normal_set_from_json(input));
    if (!cert.verified || !verify_certificate(cert).ok)
      throw Error(ErrorKind::CertificateInvalid, "certificate did not pass the independent verifier");
    return dump(to_json(cert));
  }
  if (v == "export") {
    ExportOptions opts;
    if (c.format == "svg") {
      opts.format = ExportFormat::Svg;
    } else if (c.format == "obj") {
      opts.format = ExportFormat::Obj;
    } else {
      throw UsageError("unknown export format " + c.format + " (svg or obj)");
    }
    opts.patch_radius = c.radius;
    opts.digits = c.digits;
    if (is_zonotope_doc(input)) return export_geometry(zonotope_from_json(input), opts);
    return export_geometry(normal_set_from_json(input), opts);
  }
  if (v == "corpus") {
    CorpusReport report = run_corpus(corpus_from_json(input));
    if (!report.all_passed()) status = kDomain;
    return format_table(report);
  }
  throw UsageError("unknown verb " + v);
}

} // namespace

int run(const Command& command, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    bool known = false;
    for (const char* v : kVerbs) known = known || command.verb == v;
    if (!known) throw UsageError("unknown verb \"" + command.verb + "\"");
    Json input = parse_json(read_input(command.input_path, in));
    try {
      int status = kOk;
      std::string text = execute(command, input, status);
      write_output(command.output_path, text, out);
      return status;
    } catch (Error& e) {
      if (e.kind() == ErrorKind::InvalidInput) throw SchemaError("$", e.what());
      if (e.stage().empty()) e.set_stage(verb_stage(command.verb));
      write_output(command.output_path, dump(error_payload(e)), out);
      err << "zonocert " << command.verb << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
      return kDomain;
    }
  } catch (const SchemaError& e) {
    err << "zonocert " << command.verb << ": invalid input at " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "zonocert: " << e.what() << '\n' << usage();
    return kUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Command cmd;
  std::string multiplier = "4";
  cmd.digits = default_render_digits();

  CLI::App app{"Certificates for Voronoi's second conjecture on lattice dicings", "zonocert"};
  app.require_subcommand(1);
  struct VerbInfo {
    const char* name;
    const char* help;
  };
  const VerbInfo verbs[] = {
      {"edges", "edge set of a normal set (fails with a witness for non-dicings)"},
      {"lattice", "basis of the lattice of the dicing"},
      {"zonotope", "Dirichlet-Voronoi zonotope of a normal set"},
      {"facets", "facet pairs of a zonotope or of the DV zonotope of a normal set"},
      {"venkov", "ridge projections and the parallelohedron test"},
      {"dv-cell", "brute-force DV cell and Delone duality report (d <= 3)"},
      {"certify", "full certificate of the second Voronoi conjecture"},
      {"export", "SVG (d = 2) or OBJ (d = 3) rendering of the DV cell"},
      {"corpus", "certify every entry of a corpus file and compare with expectations"},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", cmd.input_path, "input JSON file, - for stdin");
    sub->add_option("-o,--output", cmd.output_path, "output file, - for stdout");
    sub->callback([&cmd, name = std::string(v.name)] { cmd.verb = name; });
    if (std::string(v.name) == "dv-cell")
      sub->add_option("-m,--multiplier", multiplier, "enumeration radius multiplier (rational)");
    if (std::string(v.name) == "export") {
      sub->add_option("-f,--format", cmd.format, "svg or obj")->check(CLI::IsMember({"svg", "obj"}));
      sub->add_option("-r,--radius", cmd.radius, "lattice patch radius");
      sub->add_option("-p,--precision", cmd.digits, "significant digits")->check(CLI::Range(1, 40));
    }
  }

  if (args.size() > 1 && !args[1].empty() && args[1][0] != '-') {
    bool known = false;
    for (const char* v : kVerbs) known = known || args[1] == v;
    if (!known) {
      err << "zonocert: unknown verb \"" << args[1] << "\"\n" << usage();
      return kUsage;
    }
  }
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zonocert: " << e.what() << '\n' << usage();
    return kUsage;
  }
  try {
    cmd.multiplier = parse_rational(multiplier);
  } catch (const Error& e) {
    err << "zonocert: --multiplier: " << e.what() << '\n';
    return kUsage;
  }
  return run(cmd, in, out, err);
}

} // namespace zonocert::cli
