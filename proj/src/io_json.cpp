#include "lomean/io_json.hpp"

#include <fstream>

namespace lomean {

json matrix_to_json(const HermitianMatrix& m) {
  const int n = m.dim();
  json re = json::array(), im = json::array();
  bool complex_entries = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
      if (m(i, j).imag() != 0.0) complex_entries = true;
    }
  json out{{"dim", n}, {"re", re}};
  if (complex_entries) out["im"] = im;
  return out;
}

HermitianMatrix matrix_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("re"))
    throw DomainError("matrix_from_json: need \"dim\" and \"re\"");
  const int n = j.at("dim").get<int>();
  if (n < 1) throw DimensionError("matrix_from_json: dim must be >= 1");
  const auto re = j.at("re").get<std::vector<double>>();
  std::vector<double> im;
  if (j.contains("im"))
    im = j.at("im").get<std::vector<double>>();
  else
    im.assign(re.size(), 0.0);
  if (re.size() != static_cast<size_t>(n) * n || im.size() != re.size())
    throw DimensionError("matrix_from_json: entry arrays must have dim*dim elements");
  Matrix m(n);
  for (size_t k = 0; k < re.size(); ++k) m.storage()[k] = cplx(re[k], im[k]);
  return symmetrize(m);
}

HermitianMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  json j;
  in >> j;
  return matrix_from_json(j);
}

json mean_to_json(const MeanRepresentation& rep) {
  switch (rep.kind) {
    case MeanRepresentation::Kind::Arithmetic: return {{"kind", "arithmetic"}};
    case MeanRepresentation::Kind::Geometric: return {{"kind", "geometric"}};
    case MeanRepresentation::Kind::Harmonic: return {{"kind", "harmonic"}};
    case MeanRepresentation::Kind::FInduced:
      return {{"kind", "f_induced"}, {"function", rep.f.label}};
    case MeanRepresentation::Kind::Discrete: {
      json atoms = json::array();
      for (const auto& a : rep.atoms) atoms.push_back({{"lambda", a.lambda}, {"w", a.weight}});
      return {{"kind", "discrete"}, {"alpha", rep.alpha}, {"atoms", atoms}};
    }
  }
  throw Error("mean_to_json: bad kind");
}

MeanRepresentation mean_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "arithmetic") return MeanRepresentation::arithmetic();
  if (kind == "geometric") return MeanRepresentation::geometric();
  if (kind == "harmonic") return MeanRepresentation::harmonic();
  if (kind == "f_induced")
    return MeanRepresentation::f_induced(lookup_function(j.at("function").get<std::string>()));
  if (kind == "discrete") {
    std::vector<MeanAtom> atoms;
    for (const auto& a : j.at("atoms"))
      atoms.push_back({a.at("lambda").get<double>(), a.at("w").get<double>()});
    auto rep = MeanRepresentation::discrete(j.at("alpha").get<double>(), std::move(atoms));
    rep.require_normalized();
    return rep;
  }
  throw DomainError("mean_from_json: unknown kind '" + kind + "'");
}

json config_to_json(const MonotoneConfig& cfg) {
  return {{"t_min", cfg.t_min}, {"t_max", cfg.t_max}, {"n_max", cfg.n_max},
          {"dims", cfg.dims},   {"trials", cfg.trials}, {"seed", cfg.seed}};
}

MonotoneConfig config_from_json(const json& j) {
  MonotoneConfig cfg;
  if (j.contains("t_min")) cfg.t_min = j.at("t_min").get<double>();
  if (j.contains("t_max")) cfg.t_max = j.at("t_max").get<double>();
  if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
  if (j.contains("dims")) cfg.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (cfg.t_min <= 0.0 || cfg.t_max <= cfg.t_min)
    throw DomainError("config_from_json: need 0 < t_min < t_max");
  if (cfg.dims.empty()) throw DomainError("config_from_json: dims empty");
  return cfg;
}

ScalarFunction function_from_table_json(const json& j, const std::string& label) {
  if (!j.contains("t") || !j.contains("f"))
    throw DomainError("function table: need \"t\" and \"f\" arrays");
  return tabulated_function(j.at("t").get<std::vector<double>>(),
                            j.at("f").get<std::vector<double>>(), label);
}

ScalarFunction load_function_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open function table: " + path);
  json j;
  in >> j;
  std::string base = path;
  const auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  return function_from_table_json(j, "table:" + base);
}

json inequality_report_to_json(const InequalityReport& rep, std::uint64_t seed, int dim,
                               const std::string& function) {
  return {{"holds", rep.holds},       {"min_residual_eig", rep.min_residual_eig},
          {"tol", rep.tol_used},      {"seed", seed},
          {"dim", dim},               {"function", function}};
}

json counterexample_to_json(const Counterexample& ce) {
  json j{{"min_eig", ce.min_eig}, {"trial_index", ce.trial_index}, {"trial_seed", ce.trial_seed}};
  switch (ce.kind) {
    case Counterexample::Kind::None: j["kind"] = "none"; break;
    case Counterexample::Kind::PointSet:
      j["kind"] = "point_set";
      j["points"] = ce.points;
      break;
    case Counterexample::Kind::MatrixPair:
      j["kind"] = "matrix_pair";
      j["A"] = matrix_to_json(ce.a);
      j["B"] = matrix_to_json(ce.b);
      break;
    case Counterexample::Kind::HypothesisPair:
      j["kind"] = "hypothesis_pair";
      j["X"] = matrix_to_json(ce.a);
      j["Y"] = matrix_to_json(ce.b);
      break;
  }
  return j;
}

json verdict_to_json(const MonotonicityVerdict& v) {
  json j{{"verdict", v.violated ? "violated" : "consistent"},
         {"trials_run", v.trials_run},
         {"config", v.config_digest}};
  if (v.violated) j["counterexample"] = counterexample_to_json(v.counterexample);
  if (v.cross_checked) {
    j["numeric_verdict"] = v.numeric_violated ? "violated" : "consistent";
    j["oracles_agree"] = v.oracles_agree;
  }
  return j;
}

json decomposition_to_json(const DecompositionResult& d) {
  return {{"X", matrix_to_json(d.x)},
          {"Y", matrix_to_json(d.y)},
          {"mean_residual", d.mean_residual},
          {"reconstruction_residual", d.reconstruction_residual},
          {"floor_shift", d.floor_shift}};
}

json chain_to_json(const ChainResult& c) {
  json links = json::array();
  for (const auto& l : c.links) links.push_back(matrix_to_json(l));
  return {{"links", links}, {"factor", c.factor}, {"k", c.k}};
}

json obstruction_to_json(const ObstructionRecord& rec) {
  return {{"alpha", rec.alpha},
          {"theta", rec.theta},
          {"holds", rec.holds},
          {"min_residual_eig", rec.min_residual_eig},
          {"tol", rec.tol_used},
          {"lhs_entry11", rec.lhs_entry11},
          {"rhs_entry11", rec.rhs_entry11},
          {"rhs_entry11_printed", rec.rhs_entry11_printed},
          {"entry_bound_fails", rec.entry_bound_fails},
          {"degenerate", rec.degenerate}};
}

json hok_search_to_json(const HokSearchResult& r) {
  json j{{"found", r.found}, {"trials_run", r.trials_run}};
  if (r.found) {
    j["best_min_eig"] = r.best_min_eig;
    j["theta"] = r.theta;
    j["epsilon"] = r.epsilon;
    j["condition_min_eig"] = r.condition_min_eig;
    j["A"] = matrix_to_json(r.a);
    j["B"] = matrix_to_json(r.b);
  }
  return j;
}

}  // namespace lomean
