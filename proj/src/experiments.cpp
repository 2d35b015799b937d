#include "entlab/experiments.hpp"

#include "entlab/ef_gap.hpp"
#include "entlab/haar.hpp"
#include "entlab/net.hpp"
#include "entlab/protocols.hpp"
#include "entlab/spectra.hpp"
#include "entlab/stats.hpp"
#include "entlab/subspace_opt.hpp"
#include "entlab/tensor.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace entlab {

namespace {

using nlohmann::json;

const std::map<std::string, ExperimentKind> kKinds = {
    {"sample-entropy", ExperimentKind::SampleEntropy},
    {"tail", ExperimentKind::Tail},
    {"min-ent", ExperimentKind::MinEnt},
    {"scan-subspace", ExperimentKind::ScanSubspace},
    {"ef-gap", ExperimentKind::EfGap},
    {"sdc", ExperimentKind::Sdc},
    {"sdc-rates", ExperimentKind::SdcRates},
    {"distill", ExperimentKind::Distill},
    {"cuts", ExperimentKind::Cuts},
    {"net-audit", ExperimentKind::NetAudit},
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Fixed-order reduction: results land in trial slots, so worker count and
// scheduling never change the output bytes.
void parallel_for(long n, int workers, const std::function<void(long)>& fn) {
  workers = static_cast<int>(std::min<long>(std::max(workers, 1), std::max<long>(n, 1)));
  if (workers == 1) {
    for (long t = 0; t < n; ++t) fn(t);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (long t = next.fetch_add(1); t < n; t = next.fetch_add(1)) fn(t);
    });
  }
  for (auto& th : pool) th.join();
}

json summary_json(const SummaryStats& s) {
  return json{{"n", s.n},       {"mean", s.mean},     {"stderr", s.stderr_mean},
              {"min", s.min},   {"p05", s.p05},       {"median", s.median},
              {"p95", s.p95},   {"max", s.max}};
}

json interval_json(const BinomialInterval& iv) {
  return json{{"p_hat", iv.p_hat}, {"ci95_lower", iv.lower}, {"ci95_upper", iv.upper}};
}

std::string csv_header(const std::string& kind, const std::string& columns) {
  return "# entlab " + kind + " v1; units: entropies/rates in bits, probabilities in [0,1]\n" +
         columns + "\n";
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

struct Study {
  std::string csv;
  json summary;
};

OptimizerOptions opts_of(const ExperimentConfig& c) {
  return OptimizerOptions{c.restarts, c.max_iters, c.tol};
}

Study run_sample_entropy(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  std::vector<double> entropy(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream rng(c.seed, t);
    entropy[t] = entanglement_entropy(haar_state({shape.d_a, shape.d_b}, rng), shape);
  });
  std::string csv = csv_header("sample-entropy", "trial,entropy_bits");
  for (long t = 0; t < c.trials; ++t) csv += std::to_string(t) + "," + fmt(entropy[t]) + "\n";
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"entropy_bits", summary_json(summarize(entropy))},
                 {"page_lower_bound_bits", page_lower_bound(shape)},
                 {"max_entropy_bits", std::log2(double(shape.d_a))}};
  return out;
}

Study run_tail(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  double bound = tail_rhs(shape, c.alpha, c.c_const);  // validates d_a >= 3
  const double threshold = std::log2(double(shape.d_a)) - c.alpha - beta(shape);
  std::vector<double> entropy(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream rng(c.seed, t);
    entropy[t] = entanglement_entropy(haar_state({shape.d_a, shape.d_b}, rng), shape);
  });
  long below = 0;
  std::string csv = csv_header("tail", "trial,entropy_bits,below_threshold");
  for (long t = 0; t < c.trials; ++t) {
    int b = entropy[t] < threshold ? 1 : 0;
    below += b;
    csv += std::to_string(t) + "," + fmt(entropy[t]) + "," + std::to_string(b) + "\n";
  }
  SummaryStats stats = summarize(entropy);
  long below_mean = 0;
  for (double e : entropy)
    if (e < stats.mean - c.alpha) ++below_mean;
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"threshold_bits", threshold},
                 {"alpha", c.alpha},
                 {"beta", beta(shape)},
                 {"tail_rhs", bound},
                 {"empirical", interval_json(clopper_pearson(below, c.trials))},
                 {"entropy_bits", summary_json(stats)},
                 {"below_mean_minus_alpha", interval_json(clopper_pearson(below_mean, c.trials))},
                 {"concentration_x", (double(shape.total()) - 1.0) * c.alpha * c.alpha /
                                         std::pow(std::log2(double(shape.d_a)), 2)}};
  return out;
}

Study run_min_ent(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  if (c.s < 1 || c.s > shape.total()) throw config_error("min-ent: s out of range");
  OptimizerOptions opts = opts_of(c);
  struct Row {
    double min_bits;
    bool converged;
  };
  std::vector<Row> rows(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream sub(c.seed, t);
    RngStream sub_space = sub.substream(0);
    RngStream sub_opt = sub.substream(1);
    Subspace sp = random_subspace(shape, c.s, sub_space);
    OptimizerReport rep = min_entanglement(sp, opts, sub_opt);
    rows[t] = Row{rep.min_bits, rep.converged};
  });
  std::string csv = csv_header("min-ent", "trial,s,min_bits,converged,restarts_used");
  std::vector<double> minima;
  for (long t = 0; t < c.trials; ++t) {
    csv += std::to_string(t) + "," + std::to_string(c.s) + "," + fmt(rows[t].min_bits) + "," +
           std::to_string(rows[t].converged ? 1 : 0) + "," + std::to_string(c.restarts) + "\n";
    minima.push_back(rows[t].min_bits);
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"min_bits", summary_json(summarize(minima))},
                 {"s", c.s},
                 {"max_entropy_bits", std::log2(double(shape.d_a))}};
  return out;
}

Study run_scan_subspace(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  std::vector<int> s_values = c.s_values;
  if (s_values.empty()) {
    for (int s = 1; s <= shape.total(); s *= 2) s_values.push_back(s);
    if (s_values.back() != shape.total()) s_values.push_back(shape.total());
  }
  OptimizerOptions opts = opts_of(c);
  const long n_tasks = static_cast<long>(s_values.size()) * c.trials;
  std::vector<double> minima(n_tasks);
  parallel_for(n_tasks, c.workers, [&](long task) {
    const std::size_t si = task / c.trials;
    const long t = task % c.trials;
    RngStream master(c.seed, 0);
    RngStream sub = master.substream((std::uint64_t(si) << 32) | std::uint64_t(t));
    RngStream sub_space = sub.substream(0);
    RngStream sub_opt = sub.substream(1);
    Subspace sp = random_subspace(shape, s_values[si], sub_space);
    minima[task] = min_entanglement(sp, opts, sub_opt).min_bits;
  });
  std::string csv = csv_header("scan-subspace", "s,trial,min_bits");
  json per_s = json::array();
  for (std::size_t si = 0; si < s_values.size(); ++si) {
    std::vector<double> vals;
    for (long t = 0; t < c.trials; ++t) {
      double v = minima[si * c.trials + t];
      csv += std::to_string(s_values[si]) + "," + std::to_string(t) + "," + fmt(v) + "\n";
      vals.push_back(v);
    }
    per_s.push_back({{"s", s_values[si]}, {"min_bits", summary_json(summarize(vals))}});
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"per_s", per_s}, {"max_entropy_bits", std::log2(double(shape.d_a))}};
  return out;
}

Study run_ef_gap(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  if (c.s < 1 || c.s > shape.total()) throw config_error("ef-gap: s out of range");
  OptimizerOptions opts = opts_of(c);
  std::vector<GapRow> rows(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream sub(c.seed, t);
    RngStream sub_space = sub.substream(0);
    RngStream sub_ef = sub.substream(1);
    Subspace sp = random_subspace(shape, c.s, sub_space);
    EfBracket b = ef_bracket(sp, opts, c.decomposition_samples, sub_ef);
    rows[t] = GapRow{static_cast<int>(t), b.lower_bits, b.upper_bits, b.mutual_info_bits};
  });
  std::string csv = csv_header("ef-gap", "trial,ef_lower_bits,ef_upper_bits,mutual_info_bits");
  std::vector<double> lower, upper, mi;
  for (const GapRow& r : rows) {
    csv += std::to_string(r.trial) + "," + fmt(r.lower_bits) + "," + fmt(r.upper_bits) + "," +
           fmt(r.mutual_info_bits) + "\n";
    lower.push_back(r.lower_bits);
    upper.push_back(r.upper_bits);
    mi.push_back(r.mutual_info_bits);
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"ef_lower_bits", summary_json(summarize(lower))},
                 {"ef_upper_bits", summary_json(summarize(upper))},
                 {"mutual_info_bits", summary_json(summarize(mi))},
                 {"s", c.s}};
  return out;
}

Study run_sdc(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  std::vector<SdcOutcome> rows(c.trials, SdcOutcome{0, 0, 0, 0});
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream rng(c.seed, t);
    rows[t] = sdc_send(haar_state({shape.d_a, shape.d_b}, rng), shape);
  });
  std::string csv = csv_header("sdc", "trial,fidelity,qubits_sent,ebits_consumed");
  std::vector<double> fid;
  for (long t = 0; t < c.trials; ++t) {
    csv += std::to_string(t) + "," + fmt(rows[t].fidelity) + "," + fmt(rows[t].qubits_sent) + "," +
           fmt(rows[t].ebits_consumed) + "\n";
    fid.push_back(rows[t].fidelity);
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"fidelity", summary_json(summarize(fid))},
                 {"qubits_sent", std::log2(double(shape.d_b))},
                 {"ebits_consumed", std::log2(double(shape.d_a))}};
  return out;
}

Study run_sdc_rates(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  if (c.s < 1 || c.s > shape.total()) throw config_error("sdc-rates: s out of range");
  RngStream space_rng(c.seed, 0xF00D);
  Subspace sp = random_subspace(shape, c.s, space_rng);
  std::vector<double> lmax(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream rng(c.seed, t);
    PureState coords = haar_state(c.s, rng);
    lmax[t] = schmidt(sp.embed(coords.amplitudes), shape).lambda_max();
  });
  std::string csv = csv_header("sdc-rates", "trial,lambda_max");
  double overall = 0.0;
  for (long t = 0; t < c.trials; ++t) {
    csv += std::to_string(t) + "," + fmt(lmax[t]) + "\n";
    overall = std::max(overall, lmax[t]);
  }
  SdcRates rates = sdc_rates(c.s, overall);
  double half = 0.5 * std::log2(double(c.s));
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"lambda_max", overall},
                 {"qubits", rates.qubits},
                 {"ebits", rates.ebits},
                 {"log2_s", std::log2(double(c.s))},
                 {"pure_state_corner", {{"qubits", half}, {"ebits", half}}},
                 {"max_entangled_corner", {{"qubits", 0.0}, {"ebits", std::log2(double(c.s))}}}};
  return out;
}

Study run_distill(const ExperimentConfig& c) {
  if (c.n_parties < 3) throw config_error("distill: n_parties must be >= 3");
  std::vector<int> dims(c.n_parties, c.d);
  struct Row {
    double ent, prob;
    int resampled;
  };
  std::vector<Row> rows(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream sub(c.seed, t);
    RngStream sub_state = sub.substream(0);
    RngStream sub_meas = sub.substream(1);
    PureState psi = haar_state(dims, sub_state);
    DistillOutcome o = distill_random_measurement(psi, 0, 1, sub_meas);
    rows[t] = Row{o.entanglement_bits, o.outcome_probability, o.resampled};
  });
  std::string csv = csv_header("distill", "trial,entanglement_bits,outcome_probability,resampled");
  std::vector<double> ent;
  long resampled_total = 0;
  for (long t = 0; t < c.trials; ++t) {
    csv += std::to_string(t) + "," + fmt(rows[t].ent) + "," + fmt(rows[t].prob) + "," +
           std::to_string(rows[t].resampled) + "\n";
    ent.push_back(rows[t].ent);
    resampled_total += rows[t].resampled;
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"entanglement_bits", summary_json(summarize(ent))},
                 {"resampled_total", resampled_total},
                 {"max_entropy_bits", std::log2(double(c.d))}};
  return out;
}

Study run_cuts(const ExperimentConfig& c) {
  if (c.n_parties < 2) throw config_error("cuts: n_parties must be >= 2");
  std::vector<int> dims(c.n_parties, c.d);
  std::vector<std::vector<double>> per_cut;
  std::vector<std::string> cut_names;
  {
    // Fixed cut enumeration shared across trials.
    RngStream probe(c.seed, 0);
    PureState psi = haar_state(dims, probe);
    for (const CutEntropy& ce : bipartite_cuts_scan(psi)) {
      std::string name;
      for (std::size_t i = 0; i < ce.cut.size(); ++i) {
        if (i) name += "|";
        name += std::to_string(ce.cut[i]);
      }
      cut_names.push_back(name);
    }
    per_cut.assign(cut_names.size(), {});
  }
  std::vector<std::vector<double>> results(c.trials);
  parallel_for(c.trials, c.workers, [&](long t) {
    RngStream rng(c.seed, t + 1);  // stream 0 reserved for the probe above
    PureState psi = haar_state(dims, rng);
    std::vector<double> ents;
    for (const CutEntropy& ce : bipartite_cuts_scan(psi)) ents.push_back(ce.entropy_bits);
    results[t] = std::move(ents);
  });
  std::string csv = csv_header("cuts", "trial,cut,entropy_bits");
  for (long t = 0; t < c.trials; ++t) {
    for (std::size_t ci = 0; ci < cut_names.size(); ++ci) {
      csv += std::to_string(t) + "," + cut_names[ci] + "," + fmt(results[t][ci]) + "\n";
      per_cut[ci].push_back(results[t][ci]);
    }
  }
  json cuts = json::array();
  long total_dim = 1;
  for (int d : dims) total_dim *= d;
  for (std::size_t ci = 0; ci < cut_names.size(); ++ci) {
    long n_cut_factors = 1 + std::count(cut_names[ci].begin(), cut_names[ci].end(), '|');
    long d_cut = 1;
    for (long f = 0; f < n_cut_factors; ++f) d_cut *= c.d;
    long d_rest = total_dim / d_cut;
    BipartiteShape cut_shape(static_cast<int>(std::min(d_cut, d_rest)),
                             static_cast<int>(std::max(d_cut, d_rest)));
    cuts.push_back({{"cut", cut_names[ci]},
                    {"entropy_bits", summary_json(summarize(per_cut[ci]))},
                    {"page_lower_bound_bits", page_lower_bound(cut_shape)}});
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"per_cut", cuts}};
  return out;
}

Study run_net_audit(const ExperimentConfig& c) {
  BipartiteShape shape(c.d_a, c.d_b);
  std::vector<double> epsilons = c.epsilons.empty() ? std::vector<double>{1.0, 0.8, 0.6} : c.epsilons;
  std::string csv = csv_header("net-audit", "s,epsilon,grid_size,distinct_points,covering_estimate");
  json fits = json::array();
  for (int s = 1; s <= std::min(3, shape.total()); ++s) {
    RngStream space_rng(c.seed, s);
    Subspace sp = random_subspace(shape, s, space_rng);
    std::vector<double> log_inv_eps, log_size;
    for (double eps : epsilons) {
      Net net = build_net(sp, eps);
      RngStream audit_rng(c.seed, (std::uint64_t(s) << 32) | 0xAD17);
      double cover = covering_radius_estimate(net, sp, static_cast<int>(std::min<long>(c.trials, 500)),
                                              audit_rng);
      csv += std::to_string(s) + "," + fmt(eps) + "," + std::to_string(net.grid_size) + "," +
             std::to_string(net.size()) + "," + fmt(cover) + "\n";
      log_inv_eps.push_back(std::log(1.0 / eps));
      log_size.push_back(std::log(double(net.grid_size)));
    }
    if (log_inv_eps.size() >= 2) {
      LinearFit fit = linear_fit(log_inv_eps, log_size);
      fits.push_back({{"s", s}, {"slope", fit.slope}, {"expected_slope", 2 * s}});
    }
  }
  Study out;
  out.csv = std::move(csv);
  out.summary = {{"scaling_fits", fits}};
  return out;
}

}  // namespace

ExperimentKind parse_kind(const std::string& name) {
  auto it = kKinds.find(name);
  if (it == kKinds.end()) throw config_error("unknown experiment kind: " + name);
  return it->second;
}

std::string kind_name(ExperimentKind kind) {
  for (const auto& [name, k] : kKinds)
    if (k == kind) return name;
  return "?";
}

std::string ExperimentConfig::canonical_json() const {
  json j{{"kind", kind_name(kind)},
         {"d_a", d_a},
         {"d_b", d_b},
         {"d", d},
         {"n_parties", n_parties},
         {"s", s},
         {"s_values", s_values},
         {"alpha", alpha},
         {"c_const", c_const},
         {"epsilon", epsilon},
         {"epsilons", epsilons},
         {"trials", trials},
         {"seed", seed},
         {"restarts", restarts},
         {"max_iters", max_iters},
         {"tol", tol},
         {"decomposition_samples", decomposition_samples}};
  // workers/out/format deliberately excluded: they never change results.
  return j.dump();
}

std::string ExperimentConfig::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_json()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw config_error("trials must be >= 1");
  if (workers < 1) throw config_error("workers must be >= 1");
  if (d_a < 2 || d_b < 2) throw config_error("d_a and d_b must be >= 2");
  if (format != "csv" && format != "json") throw config_error("format must be csv or json");
  switch (kind) {
    case ExperimentKind::Tail:
      if (std::min(d_a, d_b) < 3) {
        throw config_error("tail: the bound requires d_b >= d_a >= 3");
      }
      if (alpha <= 0) throw config_error("tail: alpha must be > 0");
      break;
    case ExperimentKind::MinEnt:
    case ExperimentKind::EfGap:
    case ExperimentKind::SdcRates:
      if (s < 1) throw config_error("s must be >= 1");
      break;
    case ExperimentKind::Distill:
      if (n_parties < 3) throw config_error("distill: n_parties must be >= 3");
      break;
    case ExperimentKind::NetAudit:
      for (double e : epsilons)
        if (e <= 0 || e > 1) throw config_error("net-audit: epsilons must be in (0, 1]");
      break;
    default:
      break;
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config parse error: ") + e.what());
  }
  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") c.kind = parse_kind(value.get<std::string>());
    else if (key == "d_a") c.d_a = value.get<int>();
    else if (key == "d_b") c.d_b = value.get<int>();
    else if (key == "d") c.d = value.get<int>();
    else if (key == "n_parties") c.n_parties = value.get<int>();
    else if (key == "s") c.s = value.get<int>();
    else if (key == "s_values") c.s_values = value.get<std::vector<int>>();
    else if (key == "alpha") c.alpha = value.get<double>();
    else if (key == "c_const") c.c_const = value.get<double>();
    else if (key == "epsilon") c.epsilon = value.get<double>();
    else if (key == "epsilons") c.epsilons = value.get<std::vector<double>>();
    else if (key == "trials") c.trials = value.get<long>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "restarts") c.restarts = value.get<int>();
    else if (key == "max_iters") c.max_iters = value.get<int>();
    else if (key == "tol") c.tol = value.get<double>();
    else if (key == "decomposition_samples") c.decomposition_samples = value.get<int>();
    else if (key == "workers") c.workers = value.get<int>();
    else if (key == "out") c.out = value.get<std::string>();
    else if (key == "format") c.format = value.get<std::string>();
    else throw config_error("unknown config key: " + key);
  }
  return c;
}

ResultRecord run(const ExperimentConfig& config) {
  config.validate();
  Study study;
  switch (config.kind) {
    case ExperimentKind::SampleEntropy: study = run_sample_entropy(config); break;
    case ExperimentKind::Tail: study = run_tail(config); break;
    case ExperimentKind::MinEnt: study = run_min_ent(config); break;
    case ExperimentKind::ScanSubspace: study = run_scan_subspace(config); break;
    case ExperimentKind::EfGap: study = run_ef_gap(config); break;
    case ExperimentKind::Sdc: study = run_sdc(config); break;
    case ExperimentKind::SdcRates: study = run_sdc_rates(config); break;
    case ExperimentKind::Distill: study = run_distill(config); break;
    case ExperimentKind::Cuts: study = run_cuts(config); break;
    case ExperimentKind::NetAudit: study = run_net_audit(config); break;
  }

  ResultRecord rec{config, config.digest(), std::move(study.csv), ""};
  json manifest{{"kind", kind_name(config.kind)},
                {"config", json::parse(config.canonical_json())},
                {"config_digest", rec.config_digest},
                {"artifact_version", kArtifactVersion},
                {"timestamp", iso_timestamp()},
                {"summary", study.summary}};
  rec.summary_json = manifest.dump(2) + "\n";

  if (!config.out.empty()) {
    std::ofstream csv_out(config.out + ".csv", std::ios::binary);
    if (!csv_out) throw config_error("cannot write: " + config.out + ".csv");
    csv_out << rec.csv;
    std::ofstream json_out(config.out + ".json", std::ios::binary);
    json_out << rec.summary_json;
  }
  return rec;
}

std::vector<std::string> emit_plotdata(const ResultRecord& record, const std::string& out_stem) {
  std::vector<std::string> files;
  json summary = json::parse(record.summary_json);
  std::string path = out_stem + "_plot.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot write: " + path);
  switch (record.config.kind) {
    case ExperimentKind::Tail: {
      out << "# entlab tail plot v1; units: dimensionless\n";
      out << "concentration_x,neg_ln_p_upper\n";
      double x = summary["summary"]["concentration_x"].get<double>();
      // Use the CP upper limit so zero-count runs still chart.
      double p_up = summary["summary"]["empirical"]["ci95_upper"].get<double>();
      out << fmt(x) << "," << fmt(-std::log(std::max(p_up, 1e-300))) << "\n";
      break;
    }
    case ExperimentKind::ScanSubspace: {
      out << "# entlab scan plot v1; units: bits\n";
      out << "s,median_min_bits\n";
      for (const auto& row : summary["summary"]["per_s"]) {
        out << row["s"].get<int>() << "," << fmt(row["min_bits"]["median"].get<double>()) << "\n";
      }
      break;
    }
    case ExperimentKind::NetAudit: {
      out << "# entlab net plot v1; units: dimensionless\n";
      out << "s,slope,expected_slope\n";
      for (const auto& row : summary["summary"]["scaling_fits"]) {
        out << row["s"].get<int>() << "," << fmt(row["slope"].get<double>()) << ","
            << row["expected_slope"].get<int>() << "\n";
      }
      break;
    }
    default:
      out << "# entlab plot v1; units: bits\n";
      out << "series,value\n";
      break;
  }
  files.push_back(path);
  return files;
}

}  // namespace entlab
