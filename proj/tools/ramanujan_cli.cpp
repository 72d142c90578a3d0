#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramanujan/array_code.hpp"
#include "ramanujan/cayley_abelian.hpp"
#include "ramanujan/error.hpp"
#include "ramanujan/gunnells.hpp"
#include "ramanujan/io.hpp"
#include "ramanujan/lps.hpp"
#include "ramanujan/perturb.hpp"
#include "ramanujan/spectral.hpp"

namespace fs = std::filesystem;
using namespace ramanujan;
using io::Json;

namespace {

struct Params {
  std::optional<std::int64_t> q, l, p;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag, const std::string& family) {
  if (!v) throw InvalidArgument(family + " needs " + flag);
  return *v;
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
  return out.parent_path() / (out.stem().string() + suffix);
}

Json params_json(const Params& p) {
  Json j = Json::object();
  if (p.p) j["p"] = *p.p;
  if (p.q) j["q"] = *p.q;
  if (p.l) j["l"] = *p.l;
  return j;
}

Json shape_json(const BinaryBigraph& b, bool bipartite) {
  Json j;
  j["bipartite"] = bipartite;
  j["n_rows"] = b.rows();
  j["n_cols"] = b.cols();
  j["entries"] = b.edge_count();
  return j;
}

class Run {
 public:
  Run(std::string construction, const Params& params, std::vector<std::string> command)
      : start_(std::chrono::steady_clock::now()) {
    manifest_.construction = std::move(construction);
    manifest_.parameters = params_json(params);
    manifest_.command = std::move(command);
  }

  void write(const fs::path& path, const BinaryBigraph& b) {
    io::write_matrix_market(path, b);
    manifest_.outputs.push_back(path.string());
  }
  void note(const std::string& key, Json value) { manifest_.extra[key] = std::move(value); }
  void merge(const Json& j) {
    for (const auto& [k, v] : j.items()) manifest_.extra[k] = v;
  }
  void finish(const fs::path& out) {
    manifest_.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    io::write_json(sibling(out, ".manifest.json"), io::to_json(manifest_));
  }

 private:
  std::chrono::steady_clock::time_point start_;
  io::RunManifest manifest_;
};

void construct(const std::string& family, const Params& prm, const fs::path& out,
               const std::vector<std::string>& argv) {
  Run run(family, prm, argv);
  if (family == "array-code") {
    const BinaryBigraph b = array_code::build_array_code({need(prm.q, "--q", family), need(prm.l, "--l", family)});
    run.write(out, b);
    run.merge(shape_json(b, true));
  } else if (family == "array-code-graph") {
    const SimpleGraph g = array_code::build_array_code_graph(need(prm.q, "--q", family));
    const BinaryBigraph a = io::as_matrix(g);
    run.write(out, a);
    run.merge(shape_json(a, false));
    run.note("loops", g.loop_count());
  } else if (family == "lps") {
    const std::int64_t p = need(prm.p, "--p", family), q = need(prm.q, "--q", family);
    lps::LpsResult r = lps::build_lps(p, q);
    run.note("legendre", r.legendre);
    if (r.legendre == -1) {
      run.write(out, *r.biadjacency);
      run.merge(shape_json(*r.biadjacency, true));
    } else {
      const BinaryBigraph c1 = io::as_matrix(*r.component_psl), c2 = io::as_matrix(*r.component_psl_comp);
      run.write(out, c1);
      run.write(sibling(out, "_complement.mtx"), c2);
      const fs::path iso = sibling(out, "_isomorphism.csv");
      std::ofstream f(iso);
      f << "psl,psl_complement\n";
      for (std::size_t x = 0; x < r.isomorphism.size(); ++x) f << x + 1 << ',' << r.isomorphism[x] + 1 << '\n';
      if (!f) throw Error("failed writing " + iso.string());
      run.merge(shape_json(c1, false));
      run.note("components", 2);
      run.note("isomorphism", iso.string());
    }
  } else if (family == "gunnells") {
    const auto q = need(prm.q, "--q", family);
    const BinaryBigraph b = gunnells::build_gunnells(ff::PrimeModulus(q), need(prm.l, "--l", family));
    run.write(out, b);
    run.merge(shape_json(b, true));
  } else if (family == "li" || family == "bibak") {
    const auto q = need(prm.q, "--q", family);
    const SimpleGraph g = family == "li" ? abelian::build_li(q) : abelian::build_bibak(q);
    const BinaryBigraph a = io::as_matrix(g);
    run.write(out, a);
    run.merge(shape_json(a, false));
  } else {
    throw InvalidArgument("unknown family " + family);
  }
  run.finish(out);
}

void convert(const std::string& family, const Params& prm, const fs::path& out,
             const std::vector<std::string>& argv) {
  Run run(family + "-nonbipartite", prm, argv);
  SimpleGraph g;
  if (family == "lps") {
    g = lps::lps_nonbipartite(need(prm.p, "--p", family), need(prm.q, "--q", family)).graph;
  } else if (family == "gunnells") {
    g = gunnells::gunnells_nonbipartite(ff::PrimeModulus(need(prm.q, "--q", family)), need(prm.l, "--l", family));
  } else {
    throw InvalidArgument("unknown family " + family);
  }
  const BinaryBigraph a = io::as_matrix(g);
  run.write(out, a);
  run.merge(shape_json(a, false));
  run.finish(out);
}

void verify(const fs::path& in, const std::string& mode, const std::optional<fs::path>& report) {
  const BinaryBigraph b = io::read_matrix_market(in);
  Json j;
  if (mode == "graph") {
    const SimpleGraph g = io::as_graph(b);
    j = io::to_json(spectral::ramanujan_report(g));
    j["loops"] = g.loop_count();
  } else {
    j = io::to_json(spectral::ramanujan_report(b));
  }
  if (report) {
    io::write_json(*report, j);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int perturb_cmd(const fs::path& in, const fs::path& prohibited, const fs::path& out,
                const std::vector<std::string>& argv) {
  Run run("perturb", Params{}, argv);
  const BinaryBigraph e = io::read_matrix_market(in);
  const perturb::ProhibitedSet m = io::read_prohibited(prohibited, e.rows(), e.cols());
  const perturb::FeasibilityReport f = perturb::feasibility(e, m);
  if (!f.combinatorial()) {
    std::cout << io::to_json(f).dump(2) << '\n';
    std::cerr << "error: prohibited set is infeasible for the switch procedure\n";
    return 2;
  }
  const perturb::PerturbResult r = perturb::perturb(e, m);
  const perturb::Certificate c = perturb::verify_perturbation(e, r, m);
  run.write(out, r.e_p);
  run.write(sibling(out, "_delta_plus.mtx"), r.delta_plus);
  run.write(sibling(out, "_delta_minus.mtx"), r.delta_minus);
  const fs::path log = sibling(out, "_switches.csv");
  io::write_switch_log(log, r.switches);
  const fs::path cert = sibling(out, "_certificate.json");
  Json cj = io::to_json(c);
  cj["feasibility"] = io::to_json(f);
  io::write_json(cert, cj);
  run.note("input", in.string());
  run.note("prohibited", prohibited.string());
  run.note("switch_log", log.string());
  run.note("certificate", cert.string());
  run.note("switches", r.switches.size());
  run.finish(out);
  const bool retention_required = f.spectral.holds;
  if (!c.structural_ok() || (retention_required && !c.ok())) {
    std::cerr << "error: perturbation certificate failed, see " << cert.string() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan graph and bigraph constructions with spectral verification"};
  app.set_version_flag("--version", io::version());
  app.require_subcommand(1);
  const std::vector<std::string> command(argv, argv + argc);

  Params prm;
  std::string family;
  fs::path out;

  auto* construct_cmd = app.add_subcommand("construct", "Build a graph or bigraph and write it as Matrix Market");
  construct_cmd->add_option("family", family, "Construction family")
      ->required()
      ->check(CLI::IsMember({"array-code", "array-code-graph", "lps", "gunnells", "li", "bibak"}));
  construct_cmd->add_option("--q", prm.q, "Prime q");
  construct_cmd->add_option("--l", prm.l, "Block count or dimension l");
  construct_cmd->add_option("--p", prm.p, "Prime p (LPS)");
  construct_cmd->add_option("--out", out, "Output .mtx path")->required();

  fs::path in;
  std::string mode;
  std::optional<fs::path> report;
  auto* verify_cmd = app.add_subcommand("verify", "Spectral report for a Matrix Market file");
  verify_cmd->add_option("--in", in, "Input .mtx path")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--mode", mode, "graph or bigraph")->required()->check(CLI::IsMember({"graph", "bigraph"}));
  verify_cmd->add_option("--report", report, "Write the report here instead of stdout");

  auto* convert_cmd = app.add_subcommand("convert", "Convert a bipartite construction");
  convert_cmd->require_subcommand(1);
  auto* nonbip = convert_cmd->add_subcommand("nonbipartite", "Non-bipartite graph on one vertex class");
  nonbip->add_option("--family", family, "lps or gunnells")->required()->check(CLI::IsMember({"lps", "gunnells"}));
  nonbip->add_option("--q", prm.q, "Prime q");
  nonbip->add_option("--l", prm.l, "Dimension l (Gunnells)");
  nonbip->add_option("--p", prm.p, "Prime p (LPS)");
  nonbip->add_option("--out", out, "Output .mtx path")->required();

  fs::path prohibited;
  auto* perturb_sub = app.add_subcommand("perturb", "Remove prohibited edges by degree-preserving switches");
  perturb_sub->add_option("--in", in, "Input biadjacency .mtx")->required()->check(CLI::ExistingFile);
  perturb_sub->add_option("--prohibited", prohibited, "File of 'i,j' lines")->required()->check(CLI::ExistingFile);
  perturb_sub->add_option("--out", out, "Output .mtx path for E_p")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct_cmd) construct(family, prm, out, command);
    if (*verify_cmd) verify(in, mode, report);
    if (*nonbip) convert(family, prm, out, command);
    if (*perturb_sub) return perturb_cmd(in, prohibited, out, command);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
