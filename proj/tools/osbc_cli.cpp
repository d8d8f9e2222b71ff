#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "osbc/arrangement_file.hpp"
#include "osbc/blowup.hpp"
#include "osbc/error.hpp"
#include "osbc/report.hpp"

using namespace osbc;

namespace {

struct Options {
  std::string file;
  std::string format = "json";
  std::size_t max_hyperplanes = 12;
  std::string method = "inductive";
  std::vector<std::size_t> composition;
  bool trace = false;
  std::string tie = "first";
};

ArrangementFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("IOError", 0, 0, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement_file(ss.str());
}

void check_cap(const ArrangementFile& f, std::size_t cap) {
  if (f.hyperplanes.size() > cap)
    throw TooManyHyperplanes(std::to_string(f.hyperplanes.size()) + " hyperplanes, cap " + std::to_string(cap));
}

WeightTable motive_of(const ProjectiveBiArrangement& pb, const std::string& method) {
  if (method == "lambda") return lambda_exact_motive(pb);
  if (method == "mu") return mu_exact_motive(pb);
  return weight_graded_motive(pb);
}

Json run_analyze(const Options& o) {
  auto f = load(o.file);
  check_cap(f, o.max_hyperplanes);
  if (f.projective) {
    auto pb = to_projective(f);
    auto doc = analyze_report(pb.arrangement, o.max_hyperplanes);
    doc["projective"] = projective_report(pb);
    return doc;
  }
  return analyze_report(to_biarrangement(f), o.max_hyperplanes);
}

Json run_oscomplex(const Options& o) {
  auto f = load(o.file);
  check_cap(f, o.max_hyperplanes);
  if (f.projective) {
    auto pb = to_projective(f);
    auto doc = oscomplex_report(pb.partial);
    doc["projective"] = projective_report(pb);
    return doc;
  }
  return oscomplex_report(build_os_bicomplex(to_biarrangement(f)));
}

Json run_check(const Options& o) {
  auto f = load(o.file);
  check_cap(f, o.max_hyperplanes);
  if (f.projective) {
    auto pb = to_projective(f);
    auto doc = check_report(pb.arrangement, pb.partial, o.max_hyperplanes);
    doc["projective"] = projective_report(pb);
    return doc;
  }
  auto b = to_biarrangement(f);
  return check_report(b, build_os_bicomplex(b), o.max_hyperplanes);
}

Json run_motive(const Options& o) {
  auto f = load(o.file);
  check_cap(f, o.max_hyperplanes);
  auto pb = to_projective(f);
  Json doc;
  doc["schema"] = 1;
  doc["command"] = "motive";
  doc["projective"] = projective_report(pb);
  doc["motive"] = weight_table_report(motive_of(pb, o.method), o.method);
  return doc;
}

Json run_multizeta(const Options& o) {
  auto pb = multizeta_biarrangement(o.composition);
  if (pb.arrangement.forms().size() > o.max_hyperplanes)
    throw TooManyHyperplanes(std::to_string(pb.arrangement.forms().size()) + " hyperplanes, cap " +
                             std::to_string(o.max_hyperplanes));
  Json doc;
  doc["schema"] = 1;
  doc["command"] = "multizeta";
  doc["composition"] = o.composition;
  doc["projective"] = projective_report(pb);
  doc["lambda_tame"] = check_tameness(completed(pb, Color::Lambda), o.max_hyperplanes).tame;
  doc["file"] = serialize_arrangement_file(file_of(pb));
  doc["motive"] = weight_table_report(motive_of(pb, o.method), o.method);
  return doc;
}

Json run_blowup(const Options& o) {
  auto f = load(o.file);
  check_cap(f, o.max_hyperplanes);
  auto b = to_biarrangement(f);
  auto start = abstractify(b, build_os_bicomplex(b));
  auto steps = resolve(start, o.tie == "last" ? TieBreak::Last : TieBreak::First);
  return blowup_report(start, steps, o.trace);
}

std::string kind_of(const std::string& what) {
  auto p = what.find(": ");
  return p == std::string::npos ? "Error" : what.substr(0, p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlik-Solomon bi-complexes of bi-arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--max-hyperplanes", o.max_hyperplanes, "hyperplane cap")->capture_default_str();

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "arrangement description")->required();
    return c;
  };
  auto* analyze = file_cmd("analyze", "poset, circuits, irreducibles");
  auto* oscomplex = file_cmd("oscomplex", "per-stratum dims and differential ranks");
  auto* check = file_cmd("check", "tameness and exactness verdicts");
  auto* motive = file_cmd("motive", "weight-graded motive of a projective bi-arrangement");
  motive->add_option("--method", o.method)->check(CLI::IsMember({"inductive", "lambda", "mu"}));
  auto* mz = app.add_subcommand("multizeta", "multizeta bi-arrangement and its motive");
  mz->add_option("composition", o.composition)->required();
  mz->add_option("--method", o.method)->check(CLI::IsMember({"inductive", "lambda", "mu"}));
  auto* blowup = file_cmd("blowup", "wonderful resolution");
  blowup->add_flag("--trace", o.trace, "per-step strata and dims");
  blowup->add_option("--tie", o.tie)->check(CLI::IsMember({"first", "last"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Json doc;
  int code = 0;
  try {
    if (*analyze) doc = run_analyze(o);
    else if (*oscomplex) doc = run_oscomplex(o);
    else if (*check) doc = run_check(o);
    else if (*motive) doc = run_motive(o);
    else if (*mz) doc = run_multizeta(o);
    else if (*blowup) doc = run_blowup(o);
  } catch (const ParseError& e) {
    doc = error_report(e.kind(), e.what());
    doc["error"]["line"] = e.line();
    doc["error"]["column"] = e.column();
    code = 2;
  } catch (const Error& e) {
    doc = error_report(kind_of(e.what()), e.what());
    code = 1;
  }
  std::cout << (o.format == "tsv" ? to_tsv(doc) : doc.dump(2) + "\n");
  return code;
}
