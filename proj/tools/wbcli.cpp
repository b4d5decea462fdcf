/*
  wbcli — batch front end for the screening and curvature machinery.

  Subcommands:
    screen     screen dominant weights for the weak-Berger necessary conditions
    curvature  K(g)/B_h(g) dimensions and Berger/weak-Berger verdicts
    prolong    first prolongation dimension of a catalog entry
    catalog    list the catalog naming scheme

  Exit codes: 0 success, 1 usage error, 2 internal invariant violation,
  3 resource cap exceeded.
*/
#include <CLI11.hpp>

#include "wb/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

int write_out(std::string path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  // WB_OUT_DIR overrides the directory of relative output paths
  if (const char* dir = std::getenv("WB_OUT_DIR"); dir && *dir && path.front() != '/')
    path = std::string(dir) + "/" + path;
  std::ofstream f(path);
  if (!f) {
    std::cerr << "cannot open output file " << path << "\n";
    return 1;
  }
  f << content;
  return 0;
}

std::string verdict_text(const wb::ScreenVerdict& v) {
  std::ostringstream os;
  os << v.family << v.rank << " L=" << v.weight << " dim=" << v.dim.str();
  os << (v.survivor ? "  SURVIVOR" : "  rejected");
  if (v.rejected_by) os << " (" << *v.rejected_by << ")";
  if (!v.passed.empty()) {
    os << "  passed:";
    for (const auto& p : v.passed) os << " " << p;
  }
  if (v.classification_label) os << "  [" << *v.classification_label << "]";
  os << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak-Berger screening and curvature computations"};
  app.require_subcommand(1);

  std::string family;
  int rank = 0, max_rank = 0, threads = 1;
  long max_dim = 100;
  bool no_zero_weight = false, all_criteria = false, no_congruence_merge = false;
  std::string format = "text", out_path;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json | csv | text")->default_val("text");
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* screen = app.add_subcommand("screen", "screen dominant weights");
  screen->add_option("--family", family, "single family A..G");
  screen->add_option("--rank", rank, "single rank (with --family)");
  screen->add_option("--max-rank", max_rank, "all systems up to this rank");
  screen->add_option("--max-dim", max_dim, "dimension bound")->required();
  screen->add_flag("--no-zero-weight", no_zero_weight, "keep only modules without weight zero");
  screen->add_flag("--all-criteria", all_criteria, "also run PI/PII/QI/RI/RII");
  screen->add_flag("--no-congruence-merge", no_congruence_merge,
                   "one verdict per weight instead of per congruence class");
  screen->add_option("--threads", threads, "worker threads")->default_val(1);
  long orbit_cap = 4000000;
  screen->add_option("--orbit-cap", orbit_cap, "Weyl orbit size guard")->default_val(4000000);
  add_io(screen);

  std::string name;
  bool with_k = true, modular = false;
  long ambient_cap = 5000;
  CLI::App* curv = app.add_subcommand("curvature", "curvature spaces of a catalog algebra");
  curv->add_option("name", name, "catalog entry, e.g. so(5), u(2)_R, so(2)+sp(2)R")->required();
  curv->add_flag("!--no-k", with_k, "skip the K(g) computation");
  curv->add_flag("--modular", modular, "probabilistic rank mode (real algebras)");
  curv->add_option("--ambient-cap", ambient_cap, "ambient tensor dimension cap")
      ->default_val(5000);
  add_io(curv);

  CLI::App* prol = app.add_subcommand("prolong", "first prolongation of a catalog entry");
  prol->add_option("name", name, "catalog entry, e.g. sl(2,C)")->required();
  add_io(prol);

  CLI::App* cat = app.add_subcommand("catalog", "list catalog names");
  add_io(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (screen->parsed()) {
      wb::ScreenRangeOptions o;
      if (!family.empty()) {
        if (rank <= 0 && max_rank <= 0) {
          std::cerr << "--family needs --rank or --max-rank\n";
          return 1;
        }
        if (rank > 0)
          o.systems = {{family[0], rank}};
        else
          for (auto [f, n] : wb::systems_up_to_rank(max_rank))
            if (f == family[0]) o.systems.push_back({f, n});
      } else {
        if (max_rank <= 0) {
          std::cerr << "need --max-rank (or --family with --rank)\n";
          return 1;
        }
        o.max_rank = max_rank;
      }
      o.max_dim = max_dim;
      o.no_zero_weight = no_zero_weight;
      o.run_all_criteria = all_criteria;
      o.threads = threads;
      o.merge_congruent = !no_congruence_merge;
      o.orbit_cap = static_cast<size_t>(orbit_cap);
      auto verdicts = wb::screen_range(o);
      std::ostringstream cfg;
      cfg << "screen max_dim=" << max_dim << " no_zero_weight=" << no_zero_weight;
      if (format == "json")
        return write_out(out_path, wb::screen_report_json(verdicts, cfg.str()).dump(2) + "\n");
      if (format == "csv") return write_out(out_path, wb::screen_report_csv(verdicts));
      std::ostringstream os;
      for (const auto& v : verdicts) os << verdict_text(v);
      os << verdicts.size() << " verdicts\n";
      return write_out(out_path, os.str());
    }

    if (curv->parsed()) {
      wb::AnyRep rep = wb::catalog(name);
      wb::CurvatureReport r;
      if (modular) {
        if (!std::holds_alternative<wb::RealRep>(rep)) {
          std::cerr << "modular mode supports real algebras only\n";
          return 1;
        }
        r = wb::curvature_report_modular(std::get<wb::RealRep>(rep), with_k);
      } else {
        r = std::visit(
            [&](const auto& x) {
              return wb::curvature_report(x, with_k, static_cast<size_t>(ambient_cap));
            },
            rep);
      }
      if (format == "json") return write_out(out_path, wb::to_json(r).dump(2) + "\n");
      if (format == "csv") return write_out(out_path, wb::curvature_report_csv({r}));
      std::ostringstream os;
      os << r.algebra_name << ": dim_g=" << r.dim_g << " dim_V=" << r.dim_v
         << " dim_Bh=" << r.dim_Bh << " dim_g_h=" << r.dim_g_h;
      if (r.dim_K >= 0) os << " dim_K=" << r.dim_K << " dim_g_=" << r.dim_g_underline;
      os << "\n  weak-Berger: " << (r.is_weak_berger ? "yes" : "no");
      if (r.dim_K >= 0) os << "  Berger: " << (r.is_berger ? "yes" : "no");
      os << "  (" << r.mode << ")\n";
      return write_out(out_path, os.str());
    }

    if (prol->parsed()) {
      wb::AnyRep rep = wb::catalog(name);
      int dim = std::visit([](const auto& x) { return wb::first_prolongation(x).dim(); }, rep);
      std::ostringstream os;
      if (format == "json") {
        nlohmann::json j;
        j["algebra"] = name;
        j["dim_g1"] = dim;
        return write_out(out_path, j.dump(2) + "\n");
      }
      os << name << ": dim g^(1) = " << dim << "\n";
      return write_out(out_path, os.str());
    }

    if (cat->parsed()) {
      std::ostringstream os;
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& n : wb::catalog_names()) j.push_back(n);
        return write_out(out_path, j.dump(2) + "\n");
      }
      for (const auto& n : wb::catalog_names()) os << n << "\n";
      os << "(n stands for the size parameter; sym2_0(g2_7) has dim 27)\n";
      return write_out(out_path, os.str());
    }
  } catch (const wb::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
