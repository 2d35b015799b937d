#include "entlab/experiments.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>

namespace {

void add_common_flags(CLI::App* cmd, entlab::ExperimentConfig& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config file; explicit flags override its values");
  cmd->add_option("--seed", cfg.seed, "master RNG seed");
  cmd->add_option("--trials", cfg.trials, "number of Monte Carlo trials");
  cmd->add_option("--da", cfg.d_a, "A-side dimension");
  cmd->add_option("--db", cfg.d_b, "B-side dimension");
  cmd->add_option("--d", cfg.d, "qudit dimension (multipartite experiments)");
  cmd->add_option("--n-parties", cfg.n_parties, "number of parties");
  cmd->add_option("--s", cfg.s, "subspace dimension");
  cmd->add_option("--s-values", cfg.s_values, "subspace dimensions for scan-subspace");
  cmd->add_option("--alpha", cfg.alpha, "entanglement deficit (bits)");
  cmd->add_option("--c-const", cfg.c_const, "free constant C");
  cmd->add_option("--epsilon", cfg.epsilon, "net covering radius (trace distance)");
  cmd->add_option("--epsilons", cfg.epsilons, "covering radii for net-audit");
  cmd->add_option("--restarts", cfg.restarts, "optimizer restarts");
  cmd->add_option("--max-iters", cfg.max_iters, "optimizer iteration cap");
  cmd->add_option("--tol", cfg.tol, "optimizer gradient-norm tolerance");
  cmd->add_option("--decomposition-samples", cfg.decomposition_samples,
                  "Haar decompositions per E_f upper bound");
  cmd->add_option("--workers", cfg.workers, "worker threads (wall time only, never output bytes)");
  cmd->add_option("--out", cfg.out, "output path stem; writes <out>.csv and <out>.json");
  cmd->add_option("--format", cfg.format, "stdout format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entlab: random-subspace entanglement laboratory"};
  app.require_subcommand(1);

  struct SubState {
    entlab::ExperimentKind kind;
    CLI::App* cmd;
    entlab::ExperimentConfig cfg;
    std::string config_path;
    bool plotdata = false;
  };
  std::vector<std::pair<std::string, std::string>> kinds = {
      {"sample-entropy", "entanglement entropy of Haar random bipartite states"},
      {"tail", "empirical tail probability vs the concentration bound"},
      {"min-ent", "minimum entanglement over random subspaces"},
      {"scan-subspace", "minimum entanglement across subspace dimensions"},
      {"ef-gap", "E_f bracket and mutual information on random subspaces"},
      {"sdc", "superdense coding of Haar random states"},
      {"sdc-rates", "qubit/ebit rate accounting for a state ensemble"},
      {"distill", "random-local-measurement distillation"},
      {"cuts", "entanglement across every bipartite cut"},
      {"net-audit", "epsilon-net sizes, covering audit, and scaling fit"},
  };
  std::vector<std::unique_ptr<SubState>> subs;
  for (const auto& [name, desc] : kinds) {
    auto st = std::make_unique<SubState>();
    st->kind = entlab::parse_kind(name);
    st->cmd = app.add_subcommand(name, desc);
    st->cfg.kind = st->kind;
    add_common_flags(st->cmd, st->cfg, st->config_path);
    st->cmd->add_flag("--emit-plotdata", st->plotdata, "also write <out>_plot.csv");
    subs.push_back(std::move(st));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (auto& st : subs) {
    if (!st->cmd->parsed()) continue;
    try {
      entlab::ExperimentConfig cfg;
      if (!st->config_path.empty()) {
        cfg = entlab::load_config(st->config_path);
        cfg.kind = st->kind;
        // Flags override file values: copy over only the options that were
        // actually given on the command line.
        entlab::ExperimentConfig merged = cfg;
        auto override_if = [&](const std::string& flag, auto member) {
          if (st->cmd->count(flag) > 0) merged.*member = st->cfg.*member;
        };
        override_if("--seed", &entlab::ExperimentConfig::seed);
        override_if("--trials", &entlab::ExperimentConfig::trials);
        override_if("--da", &entlab::ExperimentConfig::d_a);
        override_if("--db", &entlab::ExperimentConfig::d_b);
        override_if("--d", &entlab::ExperimentConfig::d);
        override_if("--n-parties", &entlab::ExperimentConfig::n_parties);
        override_if("--s", &entlab::ExperimentConfig::s);
        override_if("--s-values", &entlab::ExperimentConfig::s_values);
        override_if("--alpha", &entlab::ExperimentConfig::alpha);
        override_if("--c-const", &entlab::ExperimentConfig::c_const);
        override_if("--epsilon", &entlab::ExperimentConfig::epsilon);
        override_if("--epsilons", &entlab::ExperimentConfig::epsilons);
        override_if("--restarts", &entlab::ExperimentConfig::restarts);
        override_if("--max-iters", &entlab::ExperimentConfig::max_iters);
        override_if("--tol", &entlab::ExperimentConfig::tol);
        override_if("--decomposition-samples", &entlab::ExperimentConfig::decomposition_samples);
        override_if("--workers", &entlab::ExperimentConfig::workers);
        override_if("--out", &entlab::ExperimentConfig::out);
        override_if("--format", &entlab::ExperimentConfig::format);
        cfg = merged;
      } else {
        cfg = st->cfg;
      }
      entlab::ResultRecord rec = entlab::run(cfg);
      if (st->plotdata) {
        std::string stem = cfg.out.empty() ? entlab::kind_name(cfg.kind) : cfg.out;
        entlab::emit_plotdata(rec, stem);
      }
      std::cout << (cfg.format == "json" ? rec.summary_json : rec.csv);
      return 0;
    } catch (const entlab::config_error& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    } catch (const entlab::feasibility_error& e) {
      std::cerr << "feasibility error: " << e.what() << "\n";
      return 3;
    } catch (const std::domain_error& e) {
      std::cerr << "domain error: " << e.what() << "\n";
      return 4;
    } catch (const std::invalid_argument& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
