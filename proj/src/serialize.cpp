#include "hypcover/serialize.hpp"

#include <charconv>
#include <sstream>

#include "hypcover/errors.hpp"

namespace hypcover {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string curve_csv(const CurveReport& report) {
  std::ostringstream os;
  os << "expansions,best_value,best_word\n";
  for (const CurveRecord& r : report.records) {
    os << r.expansions << ',' << format_double(r.best_value) << ',' << r.best_word.to_string() << '\n';
  }
  return os.str();
}

Json to_json(const UniMat& m) {
  return Json::array({Json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                      Json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("matrix entry must be a \"p/q\" string or an integer");
}

}  // namespace

UniMat unimat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw ParseError("matrix must be a 2x2 JSON array");
  }
  return UniMat(rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
                rational_from_json(j[1][1]));
}

Json to_json(const IntPair& v) { return Json::array({v.p.str(), v.q.str()}); }

Json to_json(const RatEigen& e) {
  Json out = Json::array();
  for (const EigenPair& p : e) out.push_back({{"value", p.value.to_string()}, {"vector", to_json(p.vector)}});
  return out;
}

Json to_json(const DioPair& p) {
  return {{"n", p.n}, {"m", p.m}, {"ratio", p.ratio}, {"log_error", p.log_error}};
}

Json to_json(const ProbeRow& row) {
  Json j = to_json(row.pair);
  j["order"] = std::string(to_string(row.order));
  j["matrix"] = to_json(row.matrix);
  j["dist_to_C_exact"] = row.exact_dist_to_c.to_string();
  j["dist_to_C"] = row.dist_to_c;
  return j;
}

Json to_json(const Gamma2Report& r) {
  return {{"max_len", r.max_len},
          {"words", r.words},
          {"congruence", {{"integral", r.integral}, {"congruent_mod2", r.congruent}, {"pass", r.congruence_pass()}}},
          {"distinct", {{"distinct_images", r.distinct_images}, {"pass", r.distinct_pass()}}},
          {"identity_gap",
           {{"nontrivial", r.nontrivial}, {"gap_at_least_2", r.gap_ok}, {"min_gap", r.min_gap.to_string()},
            {"pass", r.gap_pass()}}},
          {"pass", r.pass()}};
}

Json to_json(const ValidationReport& r) {
  return {{"shapes", r.shapes},       {"pseudo_metric", r.pseudo_metric}, {"triangle", r.triangle},
          {"group", r.group},         {"isometric", r.isometric},         {"free", r.free},
          {"valid", r.ok()},          {"failures", r.failures}};
}

Json summary_json(const CurveReport& r) {
  return {{"best_value", r.best_value},
          {"best_word", r.best_word.to_string()},
          {"expansions", r.expansions},
          {"evaluated", r.evaluated},
          {"exhausted", r.exhausted},
          {"improvements", r.records.size()}};
}

Json to_json(const FiniteModel& model) {
  Json d = Json::array();
  const auto& m = model.space.d();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    d.push_back(std::move(row));
  }
  return {{"d", std::move(d)}, {"perms", model.action.perms}};
}

FiniteModel finite_model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("perms")) {
    throw ParseError("finite model needs keys \"d\" and \"perms\"");
  }
  try {
    auto rows = j.at("d").get<std::vector<std::vector<double>>>();
    auto perms = j.at("perms").get<std::vector<std::vector<int>>>();
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != n) throw ParseError("distance matrix must be square");
      for (Eigen::Index k = 0; k < n; ++k) d(i, k) = rows[i][k];
    }
    for (const auto& p : perms) {
      for (int x : p) {
        if (x < 0 || x >= n) throw ParseError("permutation entry out of range");
      }
    }
    return {FinitePseudoMetric(std::move(d)), {std::move(perms)}};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed finite model: ") + e.what());
  } catch (const InvalidModel& e) {
    throw ParseError(e.what());
  }
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream os;
  os << "n,m,ratio,log_error,order,dist_to_C\n";
  for (const ProbeRow& r : rows) {
    os << r.pair.n << ',' << r.pair.m << ',' << format_double(r.pair.ratio) << ','
       << format_double(r.pair.log_error) << ',' << to_string(r.order) << ',' << format_double(r.dist_to_c)
       << '\n';
  }
  return os.str();
}

}  // namespace hypcover
