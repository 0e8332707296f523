#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "hypcover/covering.hpp"
#include "hypcover/errors.hpp"
#include "hypcover/finite_cover.hpp"
#include "hypcover/hyperbolic.hpp"
#include "hypcover/probe.hpp"
#include "hypcover/serialize.hpp"

namespace hypcover::cli {

namespace {

/// Named presets (A, B, U, V, C, I) or a JSON matrix.
UniMat parse_matrix(const std::string& text) {
  static const std::map<std::string, const UniMat*> presets = {
      {"A", &dense_a()}, {"B", &dense_b()}, {"U", &gamma2_u()}, {"V", &gamma2_v()}, {"C", &limit_c()}};
  if (text == "I") return UniMat{};
  if (auto it = presets.find(text); it != presets.end()) return *it->second;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw ParseError("matrix must be one of A, B, U, V, C, I or a JSON 2x2 array");
  }
  return unimat_from_json(j);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw ParseError("failed writing '" + path + "'");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

XPoint seed_point(const std::string& text) { return {HPoint::parse(text), UniMat{}}; }

Json config_json(const OrbitSearchConfig& cfg) {
  return {{"budget", cfg.budget}, {"max_len", cfg.max_word_len}, {"eps", cfg.target_eps}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Experiments on covering-formula estimates, dense and discrete subgroups of SL2, and finite covers",
               "hypcover"};
  app.require_subcommand(1);

  std::function<void()> action;

  // power
  std::string power_gen = "A";
  long power_k = 3;
  long power_range = -1;
  auto* power = app.add_subcommand("power", "Compare closed-form powers of A or B with iterated products");
  power->add_option("--gen", power_gen, "Generator")->check(CLI::IsMember({"A", "B"}));
  power->add_option("--k", power_k, "Exponent");
  power->add_option("--range", power_range, "Also check every |k| <= range");
  power->callback([&] {
    action = [&] {
      Generator g = power_gen == "A" ? Generator::A : Generator::B;
      UniMat closed = closed_power(g, power_k);
      UniMat iterated = mat_pow(generator_matrix(g), power_k);
      Json j = {{"generator", power_gen},
                {"k", power_k},
                {"closed_form", to_json(closed)},
                {"iterated", to_json(iterated)},
                {"equal", closed == iterated}};
      if (power_range >= 0) {
        long mismatches = 0;
        for (long k = -power_range; k <= power_range; ++k) {
          if (closed_power(g, k) != mat_pow(generator_matrix(g), k)) ++mismatches;
        }
        j["range"] = power_range;
        j["range_mismatches"] = mismatches;
      }
      emit(out, j);
    };
  });

  // eigen
  std::string eigen_m = "A";
  auto* eigen = app.add_subcommand("eigen", "Rational eigenpairs of a unimodular matrix");
  eigen->add_option("--m", eigen_m, "Matrix: A, B, U, V, C, I or JSON [[a,b],[c,d]]");
  eigen->callback([&] {
    action = [&] {
      UniMat m = parse_matrix(eigen_m);
      emit(out, {{"matrix", to_json(m)}, {"eigen", to_json(eigen_rational(m))}});
    };
  });

  // common-eig
  std::string ce_g = "A", ce_h = "B";
  auto* common = app.add_subcommand("common-eig", "Rational common eigenvector of two matrices");
  common->set_help_flag("--help", "Print this help message and exit");
  common->add_option("--g", ce_g, "First matrix");
  common->add_option("--h", ce_h, "Second matrix");
  common->callback([&] {
    action = [&] {
      UniMat g = parse_matrix(ce_g), h = parse_matrix(ce_h);
      auto v = common_eigenvector(g, h);
      emit(out, {{"g", to_json(g)}, {"h", to_json(h)}, {"common", v ? to_json(*v) : Json(nullptr)}});
    };
  });

  // dist
  std::string dist_z = "0+1i", dist_w = "0+2i";
  auto* dist = app.add_subcommand("dist", "Hyperbolic distance: closed form against geodesic quadrature");
  dist->add_option("--z", dist_z, "First point x+yi");
  dist->add_option("--w", dist_w, "Second point x+yi");
  dist->callback([&] {
    action = [&] {
      HPoint z = HPoint::parse(dist_z), w = HPoint::parse(dist_w);
      double closed = dist_h(z, w);
      double integrated = dist_by_integration(z, w);
      emit(out, {{"z", z.to_string()},
                 {"w", w.to_string()},
                 {"closed_form", closed},
                 {"integrated", integrated},
                 {"abs_diff", std::abs(closed - integrated)}});
    };
  });

  // orbit
  std::string orbit_x = "0+1i", orbit_y = "0+2i", orbit_csv;
  OrbitSearchConfig orbit_cfg{1000, 8, 0.0};
  auto* orbit = app.add_subcommand("orbit", "Best-first covering-formula search over the deck orbit");
  orbit->add_option("--x", orbit_x, "Base point of p (frame I)");
  orbit->add_option("--y", orbit_y, "Base point of q (frame I)");
  orbit->add_option("--budget", orbit_cfg.budget, "Node expansions")->check(CLI::PositiveNumber);
  orbit->add_option("--max-len", orbit_cfg.max_word_len, "Maximal word length")->check(CLI::PositiveNumber);
  orbit->add_option("--eps", orbit_cfg.target_eps, "Stop once the best value is <= eps")->check(CLI::NonNegativeNumber);
  orbit->add_option("--csv", orbit_csv, "Write the best-so-far curve as CSV");
  orbit->callback([&] {
    action = [&] {
      XPoint p = seed_point(orbit_x), q = seed_point(orbit_y);
      CurveReport report = orbit_search(p, q, orbit_cfg);
      Json j = {{"x", p.base.to_string()}, {"y", q.base.to_string()}, {"config", config_json(orbit_cfg)}};
      j.update(summary_json(report));
      j["witness_value"] = dist_x(p, deck_apply(report.best_word, q));
      if (!orbit_csv.empty()) write_file(orbit_csv, curve_csv(report));
      emit(out, j);
    };
  });

  // orbit-exact
  std::string oe_x = "0+1i", oe_y = "0+2i";
  int oe_len = 4;
  auto* orbit_exact = app.add_subcommand("orbit-exact", "Brute-force orbit minimum over all short words");
  orbit_exact->add_option("--x", oe_x, "Base point of p (frame I)");
  orbit_exact->add_option("--y", oe_y, "Base point of q (frame I)");
  orbit_exact->add_option("--max-len", oe_len, "Maximal word length")->check(CLI::Range(0, 12));
  orbit_exact->callback([&] {
    action = [&] {
      XPoint p = seed_point(oe_x), q = seed_point(oe_y);
      OrbitMin best = exhaustive_orbit_min(p, q, oe_len);
      emit(out, {{"x", p.base.to_string()},
                 {"y", q.base.to_string()},
                 {"max_len", oe_len},
                 {"words", word_count(oe_len)},
                 {"best_value", best.value},
                 {"best_word", best.witness.to_string()}});
    };
  });

  // dio
  double dio_eps = 0.06;
  long dio_bound = 20;
  std::string dio_method = "brute", dio_csv;
  auto* dio = app.add_subcommand("dio", "Pairs (n, m) with 2^n 3^m close to 1");
  dio->add_option("--eps", dio_eps, "Tolerance on |2^n 3^m - 1|")->check(CLI::PositiveNumber);
  dio->add_option("--bound", dio_bound, "Bound on |n|")->check(CLI::PositiveNumber);
  dio->add_option("--method", dio_method, "Search method")->check(CLI::IsMember({"brute", "convergents"}));
  dio->add_option("--csv", dio_csv, "Write the pairs as CSV");
  dio->callback([&] {
    action = [&] {
      DioMethod method = dio_method == "brute" ? DioMethod::brute : DioMethod::convergents;
      auto pairs = dio_pairs(dio_eps, dio_bound, method);
      Json rows = Json::array();
      for (const auto& p : pairs) rows.push_back(to_json(p));
      if (!dio_csv.empty()) {
        std::string csv = "n,m,ratio,log_error\n";
        for (const auto& p : pairs) {
          csv += std::to_string(p.n) + ',' + std::to_string(p.m) + ',' + format_double(p.ratio) + ',' +
                 format_double(p.log_error) + '\n';
        }
        write_file(dio_csv, csv);
      }
      emit(out, {{"eps", dio_eps}, {"bound", dio_bound}, {"method", dio_method}, {"count", pairs.size()},
                 {"pairs", rows}});
    };
  });

  // probe-c
  double probe_eps = 0.06;
  long probe_bound = 20;
  std::string probe_order = "both", probe_csv_path;
  auto* probe = app.add_subcommand("probe-c", "Distances of A^n B^m (or B^n A^m) to C along Diophantine pairs");
  probe->add_option("--order", probe_order, "Product order")->check(CLI::IsMember({"AB", "BA", "both"}));
  probe->add_option("--eps", probe_eps, "Pair tolerance")->check(CLI::PositiveNumber);
  probe->add_option("--bound", probe_bound, "Pair bound")->check(CLI::PositiveNumber);
  probe->add_option("--csv", probe_csv_path, "Write rows as CSV");
  probe->callback([&] {
    action = [&] {
      auto pairs = dio_pairs(probe_eps, probe_bound, DioMethod::brute);
      std::vector<ProbeRow> rows;
      for (ProductOrder order : {ProductOrder::AB, ProductOrder::BA}) {
        if (probe_order != "both" && probe_order != to_string(order)) continue;
        if (pairs.empty()) continue;
        auto part = probe_accumulation(pairs, order);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      Json j_rows = Json::array();
      for (const auto& r : rows) j_rows.push_back(to_json(r));
      if (!probe_csv_path.empty()) write_file(probe_csv_path, probe_csv(rows));
      emit(out, {{"C", to_json(limit_c())}, {"eps", probe_eps}, {"bound", probe_bound}, {"order", probe_order},
                 {"rows", j_rows}});
    };
  });

  // gap
  std::string gap_hom = "dense", gap_csv;
  int gap_len = 8;
  auto* gap = app.add_subcommand("gap", "Running minimum of the sup distance from h(w) to the identity");
  gap->add_option("--hom", gap_hom, "Homomorphism")->check(CLI::IsMember({"dense", "disc"}));
  gap->add_option("--max-len", gap_len, "Maximal word length")->check(CLI::Range(1, 12));
  gap->add_option("--csv", gap_csv, "Write the running-minimum curve as CSV");
  gap->callback([&] {
    action = [&] {
      GapReport r = identity_gap(gap_hom == "dense" ? dense_hom() : discrete_hom(), gap_len);
      Json j = {{"hom", gap_hom}, {"max_len", gap_len}};
      j.update(summary_json(r.curve));
      j["exact_min"] = r.exact_min.to_string();
      j["exact_witness"] = r.exact_witness.to_string();
      if (!gap_csv.empty()) write_file(gap_csv, curve_csv(r.curve));
      emit(out, j);
    };
  });

  // gamma2
  int g2_len = 8;
  auto* gamma2 = app.add_subcommand("gamma2", "Congruence, injectivity and identity-gap checks for <U, V>");
  gamma2->add_option("--max-len", g2_len, "Maximal word length")->check(CLI::Range(1, 11));
  gamma2->callback([&] { action = [&] { emit(out, to_json(gamma2_certify(g2_len))); }; });

  // finite-cover
  std::string fc_model;
  bool fc_demo = false;
  std::optional<std::uint64_t> fc_seed;
  auto* finite = app.add_subcommand("finite-cover", "Quotient pseudo-metric of a finite free isometric action");
  auto* opt_model = finite->add_option("--model", fc_model, "JSON model {\"d\": ..., \"perms\": ...}");
  auto* opt_demo = finite->add_flag("--demo", fc_demo, "4-cycle with the antipodal swap (default)");
  auto* opt_random = finite->add_option("--random", fc_seed, "Seeded random model");
  opt_model->excludes(opt_demo)->excludes(opt_random);
  opt_demo->excludes(opt_random);
  finite->callback([&] {
    action = [&] {
      FiniteModel model = demo_model();
      if (!fc_model.empty()) {
        std::ifstream f(fc_model);
        if (!f) throw ParseError("cannot read model '" + fc_model + "'");
        Json j;
        try {
          j = Json::parse(f);
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("model is not valid JSON: ") + e.what());
        }
        model = finite_model_from_json(j);
      } else if (fc_seed) {
        model = random_model(*fc_seed);
      }
      ValidationReport check = validate(model.space, model.action);
      Json j = {{"model", to_json(model)}, {"validation", to_json(check)}};
      if (!check.ok()) {
        emit(out, j);
        throw InvalidModel("model failed validation: " + check.failures.front());
      }
      Quotient q = quotient_metric(model.space, model.action);
      Permutation id(q.representatives.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      FiniteModel quotient{q.metric, {{id}}};
      j["quotient"] = to_json(quotient);
      j["representatives"] = q.representatives;
      j["zero_classes"] = zero_classes(model.space);
      j["quotient_zero_classes"] = zero_classes(q.metric);
      j["total_vanishes"] = model.space.identically_zero();
      j["quotient_vanishes"] = q.metric.identically_zero();
      j["zero_classes_surject"] = zero_classes_surject(model.space, model.action);
      emit(out, j);
    };
  });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace hypcover::cli
