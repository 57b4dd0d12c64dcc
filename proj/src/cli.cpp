#include "lcsoc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsoc/config.hpp"
#include "lcsoc/error.hpp"
#include "lcsoc/scenarios.hpp"

namespace lcsoc {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kSocleHeader =
    "ell,free_rank,star_socle_dim_total,t_socle_dim_total,window_lo,window_hi,"
    "certified\n";

std::string csv_bool(bool b) { return b ? "1" : "0"; }

std::string socle_csv(const std::vector<SocleReport>& table) {
  std::string out = kSocleHeader;
  for (const auto& r : table)
    out += std::to_string(r.ell) + "," + std::to_string(r.free_rank) + "," +
           std::to_string(r.star_socle_total()) + "," +
           std::to_string(r.t_socle_total()) + "," + std::to_string(r.window_lo) + "," +
           std::to_string(r.window_hi) + "," + csv_bool(r.certified_zero_above) + "\n";
  return out;
}

ordered_json socle_json_rows(const std::vector<SocleReport>& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : table) {
    ordered_json row;
    row["ell"] = r.ell;
    row["free_rank"] = r.free_rank;
    row["star_socle_dim_total"] = r.star_socle_total();
    row["t_socle_dim_total"] = r.t_socle_total();
    row["window_lo"] = r.window_lo;
    row["window_hi"] = r.window_hi;
    row["certified"] = r.certified_zero_above;
    ordered_json cells = ordered_json::array();
    for (const auto& c : r.cells) {
      if (c.coker_dim == 0) continue;
      ordered_json cell;
      cell["offset"] = c.offset;
      cell["coker_dim"] = c.coker_dim;
      cell["t_socle"] = c.t_socle;
      cell["star_socle"] = c.star_socle;
      cells.push_back(cell);
    }
    row["cells"] = cells;
    rows.push_back(row);
  }
  return rows;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

// scenario selection flags shared by the subcommands that need a ring and f
struct ScenArgs {
  std::string preset, config, fexpr;
  int lmin = 0, lmax = 0, lstep = 1, windowcap = 200;
  CLI::Option *preset_opt, *config_opt, *f_opt, *lmin_opt, *lmax_opt, *lstep_opt,
      *wcap_opt;
};

void add_scenario_flags(CLI::App* sub, ScenArgs& a) {
  a.preset_opt = sub->add_option("--preset", a.preset, "built-in scenario name");
  a.config_opt = sub->add_option("--config", a.config, "scenario config file");
  a.preset_opt->excludes(a.config_opt);
  a.f_opt = sub->add_option("--f", a.fexpr, "override the hypersurface expression");
  a.lmin_opt = sub->add_option("--lmin", a.lmin, "first ell");
  a.lmax_opt = sub->add_option("--lmax", a.lmax, "last ell");
  a.lstep_opt = sub->add_option("--lstep", a.lstep, "ell stride");
  a.wcap_opt = sub->add_option("--window-cap", a.windowcap,
                               "hard cap on the degree window scan");
}

ScenarioSpec load_spec(const ScenArgs& a, const CLI::Option* chr_opt,
                       std::int64_t chr) {
  ScenarioSpec spec;
  if (a.preset_opt->count())
    spec = spec_from_preset(a.preset);
  else if (a.config_opt->count())
    spec = spec_from_config_file(a.config);
  else
    throw UsageError("a scenario needs --preset or --config");
  if (chr_opt->count()) spec.characteristic = chr;
  if (a.f_opt->count()) spec.f = a.fexpr;
  if (a.lmin_opt->count()) spec.lmin = a.lmin;
  if (a.lmax_opt->count()) spec.lmax = a.lmax;
  if (a.lstep_opt->count()) spec.lstep = a.lstep;
  if (a.wcap_opt->count()) spec.windowcap = a.windowcap;
  return spec;
}

const Hypersurface& need_f(const BuiltScenario& built) {
  if (!built.f) throw UsageError("the scenario defines no f");
  return *built.f;
}

void check_range(const ScenarioSpec& spec) {
  if (spec.lmin < 1 || spec.lmax < spec.lmin)
    throw UsageError("need 1 <= lmin <= lmax (from flags or config)");
  if (spec.lstep < 1) throw UsageError("lstep must be positive");
}

int run_impl(int argc, char** argv) {
  CLI::App app{"exact graded socle computations for top local cohomology of "
               "hypersurfaces over a graded coefficient ring"};
  app.require_subcommand(1);

  std::int64_t chr = 32003;
  std::string format = "csv", out_path;
  int jobs = 1, deg_cap = 24;
  bool allow_inconclusive = false;
  auto* chr_opt = app.add_option("--char", chr, "field characteristic (0 = rationals)")
                      ->envname("LCSOC_CHAR");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("LCSOC_FORMAT");
  app.add_option("--out", out_path, "write the report here instead of stdout")
      ->envname("LCSOC_OUT");
  app.add_option("--jobs", jobs, "worker threads for per-ell fan-out")
      ->check(CLI::PositiveNumber)
      ->envname("LCSOC_JOBS");
  app.add_flag("--allow-inconclusive", allow_inconclusive,
               "exit 0 when the verdict is inconclusive rather than failed")
      ->envname("LCSOC_ALLOW_INCONCLUSIVE");
  app.add_option("--deg-cap", deg_cap, "exactness cap for ideal checks")
      ->check(CLI::PositiveNumber)
      ->envname("LCSOC_DEG_CAP");

  auto* verify = app.add_subcommand(
      "verify", "hypothesis checks plus the star-socle table, with a verdict");
  ScenArgs verify_args;
  add_scenario_flags(verify, verify_args);

  auto* socle = app.add_subcommand(
      "socle", "socle/star-socle dimension table over an ell range");
  ScenArgs socle_args;
  add_scenario_flags(socle, socle_args);

  auto* vanish = app.add_subcommand(
      "vanish", "check that the pieces vanish iff f has a unit coefficient");
  ScenArgs vanish_args;
  add_scenario_flags(vanish, vanish_args);

  auto* lsummand = app.add_subcommand(
      "lsummand", "distinguished summand bases and bidiagonal matrix checks");
  ScenArgs lsummand_args;
  add_scenario_flags(lsummand, lsummand_args);
  int qmax = 6;
  lsummand->add_option("--qmax", qmax, "largest q to check")
      ->check(CLI::NonNegativeNumber);

  auto* annfam = app.add_subcommand(
      "ann-family", "annihilators and minors of the bidiagonal family over k[u,v]");
  int n_max = 10, ann_cap = 0;
  annfam->add_option("--n-max", n_max, "largest matrix size")
      ->check(CLI::PositiveNumber);
  annfam->add_option("--cap", ann_cap, "degree cap (default 2*n_max + 2)");

  auto* minors = app.add_subcommand(
      "minors", "maximal minors of the n x (n+1) bidiagonal matrix over k[u,v]");
  int minors_n = 0;
  minors->add_option("--n", minors_n, "matrix size")
      ->required()
      ->check(CLI::PositiveNumber);

  for (auto* sub : {verify, socle, vanish, lsummand, annfam, minors})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(verify)) {
    ScenarioSpec spec = load_spec(verify_args, chr_opt, chr);
    check_range(spec);
    BuiltScenario built = build_scenario(spec);
    VerifyOptions opts;
    opts.ell_lo = spec.lmin;
    opts.ell_hi = spec.lmax;
    opts.ell_step = spec.lstep;
    opts.deg_cap = deg_cap;
    opts.window.hard_cap = spec.windowcap;
    opts.jobs = jobs;
    VerificationReport rep = verify_theorem(need_f(built), opts);

    if (format == "csv") {
      emit(out_path, socle_csv(rep.table));
    } else {
      ordered_json j;
      j["sop"] = {{"state", to_string(rep.sop.state)}, {"note", rep.sop.note}};
      j["support"] = {{"state", to_string(rep.support.state)},
                      {"note", rep.support.note}};
      j["verdict"] = to_string(rep.verdict);
      j["notes"] = rep.notes;
      j["table"] = socle_json_rows(rep.table);
      emit(out_path, j.dump(2) + "\n");
    }
    std::cerr << "verdict: " << to_string(rep.verdict) << "\n";
    std::cerr << "sop: " << to_string(rep.sop.state) << "\n";
    std::cerr << "support: " << to_string(rep.support.state) << "\n";
    for (const auto& n : rep.notes) std::cerr << "note: " << n << "\n";
    if (rep.verdict == Verdict::Pass) return 0;
    if (rep.verdict == Verdict::Inconclusive && allow_inconclusive) return 0;
    return 1;
  }

  if (app.got_subcommand(socle)) {
    ScenarioSpec spec = load_spec(socle_args, chr_opt, chr);
    check_range(spec);
    BuiltScenario built = build_scenario(spec);
    WindowPolicy policy;
    policy.hard_cap = spec.windowcap;
    std::vector<SocleReport> table =
        star_socle_table(need_f(built), spec.lmin, spec.lmax, spec.lstep, policy, jobs);
    if (format == "csv") {
      emit(out_path, socle_csv(table));
    } else {
      ordered_json j;
      j["table"] = socle_json_rows(table);
      emit(out_path, j.dump(2) + "\n");
    }
    return 0;
  }

  if (app.got_subcommand(vanish)) {
    ScenarioSpec spec = load_spec(vanish_args, chr_opt, chr);
    BuiltScenario built = build_scenario(spec);
    const Hypersurface& f = need_f(built);
    if (spec.lmin < 1) spec.lmin = f.ring().num_xvars();
    if (spec.lmax < spec.lmin) spec.lmax = spec.lmin + 10;
    WindowPolicy policy;
    policy.hard_cap = spec.windowcap;
    VanishingReport rep = vanishing_check(f, spec.lmin, spec.lmax, policy);
    if (format == "csv") {
      std::string payload = "ell,all_zero,first_nonzero_offset,certified\n";
      for (const auto& r : rep.rows)
        payload += std::to_string(r.ell) + "," + csv_bool(r.all_zero) + "," +
                   std::to_string(r.first_nonzero_offset) + "," +
                   csv_bool(r.certified) + "\n";
      emit(out_path, payload);
    } else {
      ordered_json j;
      j["fbar_nonzero"] = rep.fbar_nonzero;
      j["consistent"] = rep.consistent;
      ordered_json rows = ordered_json::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"ell", r.ell},
                        {"all_zero", r.all_zero},
                        {"first_nonzero_offset", r.first_nonzero_offset},
                        {"certified", r.certified}});
      j["rows"] = rows;
      emit(out_path, j.dump(2) + "\n");
    }
    std::cerr << "fbar_nonzero: " << (rep.fbar_nonzero ? "true" : "false") << "\n";
    std::cerr << "consistent: " << (rep.consistent ? "true" : "false") << "\n";
    return rep.consistent ? 0 : 1;
  }

  if (app.got_subcommand(lsummand)) {
    ScenarioSpec spec = load_spec(lsummand_args, chr_opt, chr);
    BuiltScenario built = build_scenario(spec);
    const Hypersurface& f = need_f(built);
    const auto& xnames = f.ring().x_var_names();
    bool all_ok = true;
    std::string payload = "q,ell,basis_size,delta_ok,closure_ok\n";
    ordered_json rows = ordered_json::array();
    for (int q = 0; q <= qmax; ++q) {
      std::vector<InverseMonomial> basis = l_summand_basis(f, q);
      bool delta_ok = delta_matrix_check(f, q).ok;
      bool closure_ok = complement_closure_check(f, q);
      all_ok = all_ok && delta_ok && closure_ok;
      if (format == "csv") {
        payload += std::to_string(q) + "," + std::to_string(l_summand_ell(f, q)) + "," +
                   std::to_string(basis.size()) + "," + csv_bool(delta_ok) + "," +
                   csv_bool(closure_ok) + "\n";
      } else {
        ordered_json row;
        row["q"] = q;
        row["ell"] = l_summand_ell(f, q);
        ordered_json els = ordered_json::array();
        for (const auto& m : basis) els.push_back(m.to_string(xnames));
        row["basis"] = els;
        row["delta_ok"] = delta_ok;
        row["closure_ok"] = closure_ok;
        rows.push_back(row);
      }
    }
    if (format == "csv") {
      emit(out_path, payload);
    } else {
      ordered_json j;
      j["rows"] = rows;
      emit(out_path, j.dump(2) + "\n");
    }
    return all_ok ? 0 : 1;
  }

  if (app.got_subcommand(annfam)) {
    Ring ring(chr, RingBackend::Poly, {"u", "v"}, {}, {"x"}, {});
    int cap = ann_cap > 0 ? ann_cap : 2 * n_max + 2;
    std::vector<AnnFamilyRow> rows = ann_family_experiment(ring, n_max, cap);
    if (format == "csv") {
      std::string payload =
          "n,ann_equals_uv_pow_n,minors_equal,mindeg_intersection_so_far\n";
      for (const auto& r : rows)
        payload += std::to_string(r.n) + "," + csv_bool(r.ann_equals_power) + "," +
                   csv_bool(r.minors_equal) + "," +
                   std::to_string(r.mindeg_intersection) + "\n";
      emit(out_path, payload);
    } else {
      ordered_json jrows = ordered_json::array();
      for (const auto& r : rows)
        jrows.push_back({{"n", r.n},
                         {"ann_equals_uv_pow_n", r.ann_equals_power},
                         {"minors_equal", r.minors_equal},
                         {"mindeg_intersection_so_far", r.mindeg_intersection}});
      ordered_json j;
      j["rows"] = jrows;
      emit(out_path, j.dump(2) + "\n");
    }
    return 0;
  }

  // minors
  Ring ring(chr, RingBackend::Poly, {"u", "v"}, {}, {"x"}, {});
  GradedIdeal ideal = maximal_minors(ring, build_An(ring, minors_n), minors_n + 1);
  if (format == "csv") {
    std::string payload = "generator\n";
    for (const auto& g : ideal.generators)
      payload += g.to_string(ring.u_var_names()) + "\n";
    emit(out_path, payload);
  } else {
    ordered_json gens = ordered_json::array();
    for (const auto& g : ideal.generators) gens.push_back(g.to_string(ring.u_var_names()));
    ordered_json j;
    j["n"] = minors_n;
    j["generators"] = gens;
    emit(out_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  try {
    return run_impl(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lcsoc
