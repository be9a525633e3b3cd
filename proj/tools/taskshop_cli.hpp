// Copyright 2026 The TaskWeb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `taskshop` command line. dispatch() is kept separate from main() so
// tests can drive it in-process with captured streams.
//
// Exit codes: 0 success, 1 domain error (JSON object on stderr), 2 usage.

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taskweb/taskweb.hpp"

namespace taskweb::cli {

inline constexpr const char* kVersion = "0.1.0";

namespace fs = std::filesystem;
using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + path, {{"path", path}});
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to a temporary sibling, then renames over `path`.
inline void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::kIoError, "cannot write " + path.string(),
                  {{"path", path.string()}});
    }
    out << content;
    if (!out.flush()) {
      throw Error(ErrorCode::kIoError, "short write to " + path.string());
    }
  }
  fs::rename(tmp, path);
}

inline void emit(const std::string& path, const std::string& content,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

inline TaskWebGraph read_web(const std::string& path) {
  return load_web(read_file(path));
}

inline std::string fmt_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Prompts from a pool file (.jsonl) or one prompt per line otherwise; only
// the first kMaxTargetExamples are kept.
inline TargetExamples read_target_examples(const std::string& path,
                                           const std::string& task_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path, {{"path", path}});
  const std::string task =
      task_override.empty() ? fs::path(path).stem().string() : task_override;
  std::vector<std::string> prompts;
  if (fs::path(path).extension() == ".jsonl") {
    for (const Example& e : read_pool(in, task).examples) prompts.push_back(e.prompt);
  } else {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) prompts.push_back(line);
    }
  }
  if (prompts.size() > kMaxTargetExamples) prompts.resize(kMaxTargetExamples);
  return TargetExamples(task, std::move(prompts));
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  EnvLookup env;
  ConfigFile config;
  int jobs = 1;
};

// Flags shared by every command that needs a similarity provider.
struct ProviderFlags {
  std::string kind;
  std::string similarity;
  std::string embeddings;
  std::string target_embeddings;
  std::string pools;
  bool judge_stub = false;
  std::optional<std::string> judge_endpoint;
  std::optional<std::string> judge_token;
  std::optional<std::string> cache_dir;
  CLI::Option* kind_opt = nullptr;

  void attach(CLI::App* app) {
    kind_opt = app->add_option("--provider", kind, "file, roe or judge")
                   ->check(CLI::IsMember({"file", "roe", "judge"}));
    app->add_option("--similarity", similarity, "CSV source,target,score (file)");
    app->add_option("--embeddings", embeddings, "task embeddings JSONL (roe)");
    app->add_option("--target-embeddings", target_embeddings,
                    "embeddings for unseen targets (roe)");
    app->add_option("--pools", pools, "directory of <task>.jsonl example pools");
    app->add_flag("--judge-stub", judge_stub, "offline hash-based judge");
    app->add_option("--judge-endpoint", judge_endpoint, "judge HTTP endpoint");
    app->add_option("--judge-token", judge_token, "judge bearer token");
    app->add_option("--cache-dir", cache_dir, "judge cache directory");
  }
};

struct Provider {
  std::unique_ptr<SimilarityProvider> f;
  std::shared_ptr<JudgeCache> cache;
  fs::path cache_file;

  void save_cache() const {
    if (cache && !cache_file.empty()) cache->save(cache_file);
  }
};

inline EmbeddingStore read_embeddings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path, {{"path", path}});
  return EmbeddingStore::from_jsonl(in);
}

inline Provider make_provider(ProviderFlags& flags, const Context& ctx) {
  const std::string kind =
      resolve_setting(nullptr,
                      flags.kind_opt->count() ? std::optional(flags.kind)
                                              : std::nullopt,
                      ctx.config, "provider", "roe")
          .value();
  Provider p;
  if (kind == "file") {
    if (flags.similarity.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--provider file needs --similarity");
    }
    std::ifstream in(flags.similarity);
    if (!in) throw Error(ErrorCode::kIoError, "cannot read " + flags.similarity);
    p.f = std::make_unique<FileProvider>(FileProvider::from_csv(in));
  } else if (kind == "roe") {
    EmbeddingStore sources = flags.embeddings.empty()
                                 ? fixture_embeddings()
                                 : read_embeddings(flags.embeddings);
    EmbeddingStore targets = flags.target_embeddings.empty()
                                 ? EmbeddingStore{}
                                 : read_embeddings(flags.target_embeddings);
    p.f = std::make_unique<EmbeddingProvider>(std::move(sources), std::move(targets));
  } else if (kind == "judge") {
    if (flags.pools.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--provider judge needs --pools for source examples");
    }
    std::map<std::string, std::vector<std::string>, std::less<>> examples;
    for (const auto& [task, pool] : read_pool_dir(flags.pools)) {
      auto& v = examples[task];
      for (const Example& e : pool.examples) {
        if (v.size() == kDefaultSourceExamples) break;
        v.push_back(e.prompt);
      }
    }
    std::shared_ptr<JudgeBackend> backend;
    if (flags.judge_stub) {
      backend = std::make_shared<StubJudgeBackend>();
    } else {
      HttpJudgeConfig cfg;
      cfg.endpoint = resolve_setting("TASKWEB_JUDGE_ENDPOINT", flags.judge_endpoint,
                                     ctx.config, "judge.endpoint", "", ctx.env)
                         .value();
      cfg.token = resolve_setting("TASKWEB_JUDGE_TOKEN", flags.judge_token,
                                  ctx.config, "judge.token", "", ctx.env)
                      .value();
      backend = std::make_shared<HttpJudgeBackend>(cfg);
    }
    p.cache = std::make_shared<JudgeCache>();
    if (auto dir = resolve_setting("TASKWEB_CACHE_DIR", flags.cache_dir,
                                   ctx.config, "cache.dir", std::nullopt,
                                   ctx.env)) {
      p.cache_file = fs::path(*dir) / "judge_cache.json";
      p.cache->load(p.cache_file);
    }
    JudgeOptions options;
    options.max_in_flight = std::max(1, ctx.jobs);
    p.f = std::make_unique<JudgeProvider>(backend, std::move(examples), options,
                                          p.cache);
  }
  return p;
}

inline double resolve_double(CLI::Option* opt, double flag_value,
                             const ConfigFile& cfg, const std::string& key,
                             double fallback) {
  if (opt->count()) return flag_value;
  if (auto v = cfg.get(key)) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
      throw Error(ErrorCode::kParseError, "config key " + key + " is not a number",
                  {{"key", key}, {"value", *v}});
    }
    return out;
  }
  return fallback;
}

inline std::string resolve_string(CLI::Option* opt, const std::string& flag_value,
                                  const ConfigFile& cfg, const std::string& key,
                                  const std::string& fallback) {
  return resolve_setting(nullptr,
                         opt->count() ? std::optional(flag_value) : std::nullopt,
                         cfg, key, fallback)
      .value();
}

inline MetricConfig resolve_metric_config(CLI::Option* alpha_opt, double alpha,
                                          CLI::Option* scaling_opt,
                                          const std::string& scaling,
                                          const ConfigFile& cfg) {
  MetricConfig mc;
  mc.alpha = resolve_double(alpha_opt, alpha, cfg, "alpha", 0.5);
  const std::string s = resolve_string(scaling_opt, scaling, cfg, "pm_scaling", "signed");
  auto parsed = parse_pm_scaling(s);
  if (!parsed) {
    throw Error(ErrorCode::kInvalidArgument, "unknown pm scaling " + s,
                {{"pm_scaling", s}});
  }
  mc.pm_scaling = *parsed;
  mc.validate();
  return mc;
}

inline json ranking_json(const SelectionResult& r, double lambda) {
  json ranked = json::array();
  for (const auto& x : r.ranked) ranked.push_back({{"source", x.source}, {"score", x.score}});
  json j = {{"target", r.target}, {"method", r.method}, {"ranked", ranked}};
  if (r.method.rfind("taskshop_", 0) == 0) j["lambda"] = lambda;
  return j;
}

inline SelectionResult ranking_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ranked") || !j["ranked"].is_array() ||
      !j.contains("target") || !j["target"].is_string()) {
    throw schema_violation("", "expected a ranking with target and ranked");
  }
  SelectionResult r;
  r.target = j["target"].get<std::string>();
  r.method = j.value("method", std::string("unknown"));
  for (std::size_t i = 0; i < j["ranked"].size(); ++i) {
    const auto& x = j["ranked"][i];
    if (!x.is_object() || !x.contains("source") || !x["source"].is_string() ||
        !x.contains("score") || !x["score"].is_number()) {
      throw schema_violation("/ranked/" + std::to_string(i),
                             "expected {source, score}");
    }
    r.ranked.push_back({x["source"].get<std::string>(), x["score"].get<double>()});
  }
  return r;
}

// Ranks the web's sources for `target`, hiding the target from the web when
// it is present and `allow_seen` is set.
inline SelectionResult rank_for_target(const TaskWebGraph& web,
                                       const TargetExamples& target,
                                       const SimilarityProvider& f,
                                       const TaskShopConfig& cfg, bool taskshop,
                                       bool allow_seen, int jobs) {
  const AveragedView base(web);
  if (!base.contains(target.task)) {
    return taskshop ? rank_sources(target, base, f, cfg, jobs)
                    : rank_by_provider(target, base, f, jobs);
  }
  if (!allow_seen) detail::check_unseen(base, target);
  const MaskedView masked(base, target.task);
  return taskshop ? rank_sources(target, masked, f, cfg, jobs)
                  : rank_by_provider(target, masked, f, jobs);
}

inline json version_json() {
  return {{"taskshop", kVersion},
          {"schemas",
           {{"web_json", kWebSchemaVersion},
            {"embeddings_jsonl", kEmbeddingSchemaVersion},
            {"example_pool_jsonl", kPoolSchemaVersion},
            {"manifest_jsonl", kManifestSchemaVersion},
            {"evaluation_report", kReportSchemaVersion},
            {"runs_csv", 1},
            {"similarity_csv", 1},
            {"judge_prompt", std::string(kJudgePromptVersion)}}}};
}

inline std::string runs_csv(const std::vector<SeedRun>& runs) {
  std::ostringstream out;
  out << "source,target,setup,seed,baseline_metric,transfer_metric\n";
  for (const SeedRun& r : runs) {
    out << r.source << ',' << r.target << ',' << r.setup << ',' << r.seed << ','
        << fmt_double(r.baseline_metric) << ',' << fmt_double(r.transfer_metric)
        << '\n';
  }
  return out.str();
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err, EnvLookup env = process_env) {
  CLI::App app{"Task transfer analytics and source-task selection", "taskshop"};
  app.set_help_all_flag("--help-all", "Expand all help");
  std::string config_path;
  int jobs = 1;
  bool show_version = false;
  app.add_option("--config", config_path, "TOML-like config file");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--version", show_version, "print schema versions");
  app.require_subcommand(0, 1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "build a web from a seed-level log");
  std::string runs_path, ingest_out, pm_scaling;
  double alpha = 0.5;
  ingest->add_option("--runs", runs_path, "runs CSV")->required();
  auto* alpha_opt = ingest->add_option("--alpha", alpha, "PC weight in [0, 1]");
  auto* scaling_opt = ingest->add_option("--pm-scaling", pm_scaling, "raw or signed");
  ingest->add_option("--out", ingest_out, "output web JSON");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "structure analyses");
  analyze->require_subcommand(1);
  std::string web_path, setup, thresholds = "0:0.1:0.01", analyze_out;
  bool as_csv = false;
  std::optional<double> zero_band;
  auto* commute = analyze->add_subcommand("commute", "sign agreement of pairs");
  auto* transitive = analyze->add_subcommand("transitive", "transitivity curve");
  auto* positivity = analyze->add_subcommand("positivity", "edge sign counts");
  for (auto* sub : {commute, transitive, positivity}) {
    sub->add_option("--web", web_path, "web JSON")->required();
    sub->add_option("--out", analyze_out, "output file");
  }
  for (auto* sub : {commute, transitive}) {
    sub->add_option("--setup", setup, "single setup instead of the average");
  }
  transitive->add_option("--thresholds", thresholds, "start:stop:step or one value");
  transitive->add_flag("--csv", as_csv, "CSV instead of JSON");
  positivity->add_option("--zero-band", zero_band,
                         "|score| below this counts as zero (default: from web)");

  // setup-sim
  auto* setup_sim = app.add_subcommand("setup-sim", "Pearson similarity of setups");
  setup_sim->add_option("--web", web_path, "web JSON")->required();
  setup_sim->add_option("--out", analyze_out, "output file");

  // score
  auto* score = app.add_subcommand("score", "rank source tasks for a target");
  std::string target_path, target_task, score_out;
  double lambda = 0.5;
  bool allow_seen = false, no_pivots = false;
  ProviderFlags score_pf;
  score->add_option("--web", web_path, "web JSON")->required();
  score->add_option("--target", target_path, "target examples (.jsonl or text)");
  score->add_option("--target-task", target_task, "target task id");
  auto* score_lambda = score->add_option("--lambda", lambda, "pivot weight");
  score->add_flag("--allow-seen", allow_seen, "mask a target present in the web");
  score->add_flag("--provider-only", no_pivots, "rank by F alone");
  score->add_option("--out", score_out, "output ranking JSON");
  score_pf.attach(score);

  // select
  auto* select = app.add_subcommand("select", "pick k sources from a ranking");
  std::string ranking_path, select_out;
  std::size_t select_k = 5;
  bool select_bottom = false;
  select->add_option("--ranking", ranking_path, "ranking JSON")->required();
  select->add_option("--k", select_k, "number of sources");
  select->add_flag("--bottom", select_bottom, "lowest-scoring sources instead");
  select->add_option("--out", select_out, "output file");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "leave-one-out ranking evaluation");
  std::string examples_dir, report_out;
  std::vector<std::size_t> k_values{5};
  std::vector<std::string> eval_targets;
  double eval_lambda = 0.5;
  ProviderFlags eval_pf;
  evaluate->add_option("--web", web_path, "web JSON")->required();
  evaluate->add_option("--examples-dir", examples_dir, "<task>.jsonl target examples");
  evaluate->add_option("--k", k_values, "Regret@k cutoffs")->delimiter(',');
  evaluate->add_option("--targets", eval_targets, "targets (default: all)")
      ->delimiter(',');
  auto* eval_lambda_opt = evaluate->add_option("--lambda", eval_lambda, "pivot weight");
  evaluate->add_option("--report", report_out, "output report JSON");
  eval_pf.attach(evaluate);

  // build-trainset
  auto* build = app.add_subcommand("build-trainset", "sample a training manifest");
  std::string manifest_out, selection = "taskshop", pools_dir;
  std::size_t build_k = 5, per_task = 2000, mix_replace = 0;
  std::uint64_t seed = 13;
  bool bottom = false, random_sel = false;
  std::vector<std::string> explicit_tasks;
  double build_lambda = 0.5;
  ProviderFlags build_pf;
  build->add_option("--web", web_path, "web JSON")->required();
  build->add_option("--target-examples", target_path, "target examples");
  build->add_option("--target-task", target_task, "target task id");
  build->add_option("--k", build_k, "number of source tasks");
  build->add_option("--per-task", per_task, "examples per task");
  build->add_option("--seed", seed, "sampling seed");
  build->add_option("--out", manifest_out, "output manifest JSONL");
  auto* bottom_opt = build->add_flag("--bottom", bottom, "bottom-k sources");
  auto* random_opt = build->add_flag("--random", random_sel, "k random sources");
  auto* mix_opt = build->add_option("--mix-replace", mix_replace,
                                    "replace this many top tasks by bottom ones");
  auto* tasks_opt = build->add_option("--tasks", explicit_tasks, "explicit task list")
                        ->delimiter(',');
  build->add_option("--selection", selection, "taskshop or taskweb")
      ->check(CLI::IsMember({"taskshop", "taskweb"}));
  auto* build_lambda_opt = build->add_option("--lambda", build_lambda, "pivot weight");
  bottom_opt->excludes(random_opt)->excludes(mix_opt)->excludes(tasks_opt);
  random_opt->excludes(mix_opt)->excludes(tasks_opt);
  mix_opt->excludes(tasks_opt);
  build_pf.attach(build);
  // --pools is shared with the judge provider's source examples.

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "write the bundled fixture files");
  std::string fx_out, fx_runs, fx_emb, fx_pools, fx_sim;
  std::size_t pool_size = 2500;
  fixtures->add_option("--out", fx_out, "web JSON")->required();
  fixtures->add_option("--runs-out", fx_runs, "seed-level runs CSV");
  fixtures->add_option("--embeddings-out", fx_emb, "embeddings JSONL");
  fixtures->add_option("--similarity-out", fx_sim, "cosine similarity CSV");
  fixtures->add_option("--pools-out", fx_pools, "example pool directory");
  fixtures->add_option("--pool-size", pool_size, "examples per pool");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << e.what() << "\n";
    const CLI::App* deepest = &app;
    for (bool descended = true; descended;) {
      descended = false;
      for (const CLI::App* sub : deepest->get_subcommands({})) {
        if (sub->parsed()) {
          deepest = sub;
          descended = true;
          break;
        }
      }
    }
    err << deepest->help();
    return 2;
  }

  if (show_version) {
    out << version_json().dump(1) << "\n";
    return 0;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }

  try {
    Context ctx{out, err, std::move(env), {}, jobs};
    if (!config_path.empty()) {
      std::istringstream in(read_file(config_path));
      ctx.config = ConfigFile::parse(in);
    }

    if (ingest->parsed()) {
      std::ifstream in(runs_path);
      if (!in) throw Error(ErrorCode::kIoError, "cannot read " + runs_path);
      const MetricConfig mc = resolve_metric_config(alpha_opt, alpha, scaling_opt,
                                                    pm_scaling, ctx.config);
      const auto runs = csv::read_runs(in);
      emit(ingest_out, save_web(ingest_runs(runs, mc)), out);
      return 0;
    }

    if (analyze->parsed()) {
      const TaskWebGraph web = read_web(web_path);
      const auto view = make_view(web, setup.empty() ? std::nullopt
                                                     : std::optional(setup));
      if (commute->parsed()) {
        emit(analyze_out, to_json(commutativity(*view)).dump(1) + "\n", out);
      } else if (transitive->parsed()) {
        const auto grid = parse_threshold_range(thresholds);
        const auto curve = transitivity_curve(*view, grid, ctx.jobs);
        if (as_csv) {
          std::ostringstream s;
          s << "threshold,eligible_triples,positive_triples,positive_fraction\n";
          for (const auto& p : curve.points) {
            s << fmt_double(p.threshold) << ',' << p.eligible_triples << ','
              << p.positive_triples << ','
              << (p.positive_fraction ? fmt_double(*p.positive_fraction) : "")
              << '\n';
          }
          emit(analyze_out, s.str(), out);
        } else {
          emit(analyze_out, to_json(curve).dump(1) + "\n", out);
        }
      } else {
        const double band = zero_band ? *zero_band : display_zero_band(web);
        const auto r = positivity_report(web, band);
        const json j = {{"positive", r.positive}, {"negative", r.negative},
                        {"zero", r.zero},         {"total", r.total},
                        {"zero_band", band}};
        emit(analyze_out, j.dump(1) + "\n", out);
      }
      return 0;
    }

    if (setup_sim->parsed()) {
      const auto s = setup_similarity(read_web(web_path));
      const json j = {{"setups", s.setups}, {"pearson", s.matrix},
                      {"shared_edges", s.overlap}};
      emit(analyze_out, j.dump(1) + "\n", out);
      return 0;
    }

    if (score->parsed()) {
      const TaskWebGraph web = read_web(web_path);
      const TargetExamples target =
          !target_path.empty() ? read_target_examples(target_path, target_task)
          : !target_task.empty()
              ? fixture_target_examples(target_task)
              : throw Error(ErrorCode::kInvalidArgument,
                            "score needs --target or --target-task");
      TaskShopConfig cfg;
      cfg.lambda = resolve_double(score_lambda, lambda, ctx.config, "lambda", 0.5);
      const Provider p = make_provider(score_pf, ctx);
      const auto r = rank_for_target(web, target, *p.f, cfg, !no_pivots,
                                     allow_seen, ctx.jobs);
      p.save_cache();
      emit(score_out, ranking_json(r, cfg.lambda).dump(1) + "\n", out);
      return 0;
    }

    if (select->parsed()) {
      json j;
      try {
        j = json::parse(read_file(ranking_path));
      } catch (const json::parse_error&) {
        throw schema_violation("", "ranking is not valid JSON");
      }
      const SelectionResult r = ranking_from_json(j);
      const auto picked =
          select_bottom ? select_bottom_k(r, select_k) : select_top_k(r, select_k);
      const json o = {{"target", r.target},
                      {"method", r.method},
                      {"which", select_bottom ? "bottom" : "top"},
                      {"selected", picked}};
      emit(select_out, o.dump(1) + "\n", out);
      return 0;
    }

    if (evaluate->parsed()) {
      const TaskWebGraph web = read_web(web_path);
      TaskShopConfig cfg;
      cfg.lambda = resolve_double(eval_lambda_opt, eval_lambda, ctx.config, "lambda", 0.5);
      const Provider p = make_provider(eval_pf, ctx);
      std::map<std::string, TargetExamples, std::less<>> examples;
      for (const Task& t : web.tasks()) {
        if (!t.roles.target) continue;
        if (examples_dir.empty()) {
          examples.emplace(t.id, fixture_target_examples(t.id));
          continue;
        }
        for (const char* ext : {".jsonl", ".txt"}) {
          const fs::path file = fs::path(examples_dir) / (t.id + ext);
          if (fs::exists(file)) {
            examples.emplace(t.id, read_target_examples(file.string(), t.id));
            break;
          }
        }
      }
      LooOptions options;
      options.targets = eval_targets;
      options.jobs = ctx.jobs;
      std::vector<LooReport> reports;
      reports.push_back(loo_evaluate(web, provider_method(*p.f), k_values,
                                     examples, options, p.f->name()));
      reports.push_back(loo_evaluate(web, taskshop_method(*p.f, cfg), k_values,
                                     examples, options, "taskshop_" + p.f->name()));
      p.save_cache();
      json report = report_json(reports);
      report["metadata"]["lambda"] = cfg.lambda;
      emit(report_out, report.dump(1) + "\n", out);
      return 0;
    }

    if (build->parsed()) {
      const TaskWebGraph web = read_web(web_path);
      std::string target_id = target_task;
      std::optional<TargetExamples> target;
      if (!target_path.empty()) {
        target = read_target_examples(target_path, target_task);
        target_id = target->task;
      }
      if (target_id.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "build-trainset needs --target-examples or --target-task");
      }
      if (build_pf.pools.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "build-trainset needs --pools");
      }
      const PoolMap pools = read_pool_dir(build_pf.pools);
      auto finish = [&](TrainingManifest m, const std::string& method) {
        m.recipe.method = method;
        emit(manifest_out, m.to_jsonl(), out);
        return 0;
      };
      if (!explicit_tasks.empty()) {
        return finish(build_manifest(target_id, explicit_tasks, pools, per_task,
                                     seed, ctx.jobs),
                      "explicit");
      }
      std::vector<std::string> candidates;
      for (const Task& t : web.tasks()) {
        if (t.roles.source && t.id != target_id) candidates.push_back(t.id);
      }
      if (random_sel) {
        return finish(build_manifest(target_id, random_tasks(candidates, build_k, seed),
                                     pools, per_task, seed, ctx.jobs),
                      "random");
      }
      SelectionResult ranking;
      if (selection == "taskweb") {
        const Truth truth = incoming_truth(web, target_id);
        if (truth.empty()) {
          throw Error(ErrorCode::kMissingTruth,
                      "target " + target_id + " has no incoming scores",
                      {{"target", target_id}});
        }
        ranking.target = target_id;
        ranking.method = "taskweb";
        for (const auto& [s, v] : truth) ranking.ranked.push_back({s, v});
        detail::sort_ranking(ranking.ranked);
      } else {
        if (!target) target = fixture_target_examples(target_id);
        TaskShopConfig cfg;
        cfg.lambda = resolve_double(build_lambda_opt, build_lambda, ctx.config,
                                    "lambda", 0.5);
        const Provider p = make_provider(build_pf, ctx);
        ranking = rank_for_target(web, *target, *p.f, cfg, true, true, ctx.jobs);
        p.save_cache();
      }
      const auto top = select_top_k(ranking, build_k);
      const auto worst = select_bottom_k(ranking, build_k);
      if (mix_opt->count()) {
        return finish(mix_manifest(target_id, top, worst, mix_replace, pools,
                                   per_task, seed, ctx.jobs),
                      "mix");
      }
      return finish(build_manifest(target_id, bottom ? worst : top, pools,
                                   per_task, seed, ctx.jobs),
                    bottom ? "bottom" : "top");
    }

    if (fixtures->parsed()) {
      const TaskWebGraph web = published_fixture();
      write_file(fx_out, save_web(web));
      if (!fx_runs.empty()) write_file(fx_runs, runs_csv(fixture_runs()));
      const EmbeddingStore emb = fixture_embeddings();
      if (!fx_emb.empty()) write_file(fx_emb, emb.to_jsonl());
      if (!fx_sim.empty()) {
        std::ostringstream s;
        s << "source,target,score\n";
        for (const auto& [a, ea] : emb.entries()) {
          for (const auto& [b, eb] : emb.entries()) {
            if (a != b) s << a << ',' << b << ',' << fmt_double(cosine(ea.vector, eb.vector)) << '\n';
          }
        }
        write_file(fx_sim, s.str());
      }
      if (!fx_pools.empty()) {
        for (const auto& [task, pool] : fixture_pools(pool_size)) {
          write_file(fs::path(fx_pools) / (task + ".jsonl"), write_pool(pool));
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << e.to_json().dump() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << Error(ErrorCode::kIoError, e.what()).to_json().dump() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace taskweb::cli
