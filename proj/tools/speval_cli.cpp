#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "speval/harness.hpp"
#include "speval/jsonl.hpp"
#include "speval/nav.hpp"
#include "speval/nlnav.hpp"
#include "speval/report.hpp"
#include "speval/rng.hpp"
#include "speval/tiling.hpp"

namespace fs = std::filesystem;
using namespace speval;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartialFailure = 2;
constexpr int kExitProviderFailure = 3;

RenderPalette palette_by_id(const std::string& id) {
  if (id == "emoji") return emoji_palette();
  return ascii_palette();
}

std::vector<data::QAItem> load_items_from(const std::vector<std::string>& files,
                                          const RenderPalette& p) {
  std::vector<data::QAItem> items;
  for (const std::string& file : files) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    auto loaded = data::load_items(in, p);
    items.insert(items.end(), loaded.begin(), loaded.end());
  }
  return items;
}

void parse_k_range(const std::string& text, int& k_min, int& k_max) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    k_min = k_max = std::stoi(text);
  } else {
    k_min = std::stoi(text.substr(0, dots));
    k_max = std::stoi(text.substr(dots + 2));
  }
  if (k_min < 2 || k_max < k_min) throw CLI::ValidationError("--k", "expected MIN..MAX, MIN >= 2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial-reasoning dataset generator and evaluation harness"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string palette_id = "ascii";
  app.add_option("--palette", palette_id, "Rendering palette: ascii | emoji")
      ->capture_default_str();

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a dataset as JSONL on stdout or --out");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string gen_out;
  std::uint64_t seed = 0;
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  auto* gen_nav = gen->add_subcommand("nav", "Navigation maps and route/next-step questions");
  std::string k_range = "2..7";
  gen_nav->add_option("--k", k_range, "Instruction-count range MIN..MAX")->capture_default_str();
  gen_nav->add_option("--seed", seed, "Generation seed")->required();

  auto* gen_tiling = gen->add_subcommand("tiling", "Masked rectangle tiling questions");
  int masks_two = 12, masks_three = 8;
  gen_tiling->add_option("--seed", seed, "Generation seed")->required();
  gen_tiling->add_option("--masks-two", masks_two, "Two-piece maskings sampled per configuration")
      ->capture_default_str();
  gen_tiling
      ->add_option("--masks-three", masks_three, "Three-piece maskings sampled per configuration")
      ->capture_default_str();

  auto* gen_nlnav = gen->add_subcommand("nlnav", "Natural-language map walks");
  int count = 200;
  gen_nlnav->add_option("--count", count, "Instances to generate")->capture_default_str();
  gen_nlnav->add_option("--seed", seed, "Generation seed")->required();

  auto* gen_ring = gen->add_subcommand("ring", "Circular landmark walks");
  int ring_size = 12;
  gen_ring->add_option("--count", count, "Instances to generate")->capture_default_str();
  gen_ring->add_option("--size", ring_size, "Landmarks on the ring")->capture_default_str();
  gen_ring->add_option("--seed", seed, "Generation seed")->required();

  // --- run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run prompts against a provider, persisting transcripts");
  std::vector<std::string> data_files;
  std::string run_dir = "run";
  std::vector<std::string> setting_names = {"cot", "noviz", "vot", "vot_ascii"};
  std::string provider_name = "http";
  std::string endpoint = "https://api.openai.com";
  std::string model = "gpt-4";
  int workers = 1;
  bool no_cache = false;
  run->add_option("--data", data_files, "Dataset JSONL file(s)")->required();
  run->add_option("--run-dir", run_dir, "Run directory")->capture_default_str();
  run->add_option("--setting", setting_names, "Prompt settings")->capture_default_str();
  run->add_option("--provider", provider_name, "Provider: http | mock")->capture_default_str();
  run->add_option("--endpoint", endpoint, "API base URL")->capture_default_str();
  run->add_option("--model", model, "Model name")->capture_default_str();
  run->add_option("--workers", workers, "Concurrent requests")->capture_default_str();
  run->add_flag("--no-cache", no_cache, "Bypass the response cache");

  // --- score / analyze / report -------------------------------------------
  auto* score = app.add_subcommand("score", "Score persisted transcripts");
  auto* analyze = app.add_subcommand("analyze", "Transcript tracking and grading analysis");
  auto* report = app.add_subcommand("report", "Write scores + analysis bundle into the run dir");
  for (CLI::App* cmd : {score, analyze, report}) {
    cmd->add_option("--data", data_files, "Dataset JSONL file(s)")->required();
    cmd->add_option("--run-dir", run_dir, "Run directory")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RenderPalette palette = palette_by_id(palette_id);

  try {
    if (gen->parsed()) {
      std::ofstream file_out;
      std::ostream* out = &std::cout;
      if (!gen_out.empty()) {
        file_out.open(gen_out);
        if (!file_out) throw std::runtime_error("cannot open " + gen_out);
        out = &file_out;
      }
      if (gen_nav->parsed()) {
        int k_min = 2, k_max = 7;
        parse_k_range(k_range, k_min, k_max);
        data::write_nav_jsonl(*out, nav::generate_nav_dataset(k_min, k_max), palette);
      } else if (gen_tiling->parsed()) {
        data::write_tiling_jsonl(
            *out, tiling::generate_tiling_dataset(seed, palette, masks_two, masks_three),
            palette);
      } else if (gen_nlnav->parsed()) {
        Rng rng(seed, "nlnav");
        std::vector<nlnav::NLNavInstance> instances;
        for (int i = 0; i < count; ++i) {
          nlnav::LandmarkMap map = nlnav::generate_landmark_map(rng, nlnav::default_vocab());
          instances.push_back(nlnav::generate_walk(map, rng, rng.next_in(4, 10)));
        }
        data::write_nlnav_jsonl(*out, instances, seed);
      } else if (gen_ring->parsed()) {
        Rng rng(seed, "ring");
        std::vector<nlnav::RingNavInstance> instances;
        for (int i = 0; i < count; ++i)
          instances.push_back(nlnav::generate_ring(rng, nlnav::default_vocab(), ring_size));
        data::write_ring_jsonl(*out, instances, seed);
      }
      return kExitOk;
    }

    std::vector<data::QAItem> items = load_items_from(data_files, palette);

    if (run->parsed()) {
      std::vector<harness::Setting> settings;
      for (const std::string& name : setting_names) {
        auto s = harness::setting_from_name(name);
        if (!s) {
          std::cerr << "unknown setting: " << name << '\n';
          return kExitUsage;
        }
        settings.push_back(*s);
      }
      harness::ProviderConfig cfg;
      cfg.endpoint = endpoint;
      cfg.model = model;
      harness::RunOptions opts;
      opts.run_dir = run_dir;
      opts.workers = workers;
      opts.use_cache = !no_cache;
      opts.palette = palette;

      std::unique_ptr<harness::Provider> provider;
      if (provider_name == "mock") {
        provider = std::make_unique<harness::MockProvider>(
            harness::make_gold_oracle(items, settings, cfg, palette));
      } else if (provider_name == "http") {
        provider = std::make_unique<harness::HttpProvider>(cfg);
      } else {
        std::cerr << "unknown provider: " << provider_name << '\n';
        return kExitUsage;
      }

      harness::RunSummary summary = harness::run_suite(items, settings, *provider, cfg, opts);
      std::cout << "total " << summary.total << ", completed " << summary.completed
                << ", skipped " << summary.skipped << ", failed " << summary.failed
                << ", cache hits " << summary.cache_hits << '\n';
      if (summary.completed == 0 && summary.skipped == 0 && summary.failed > 0)
        return kExitProviderFailure;
      return summary.failed > 0 ? kExitPartialFailure : kExitOk;
    }

    if (score->parsed()) {
      auto records = harness::load_run_records(run_dir);
      std::cout << report::scores_markdown(report::score_run(items, records, palette));
      return kExitOk;
    }
    if (analyze->parsed()) {
      auto records = harness::load_run_records(run_dir);
      auto rows = report::analyze_run(items, records, palette);
      std::cout << report::analysis_markdown(rows);
      return kExitOk;
    }
    if (report->parsed()) {
      report::write_report(run_dir, items, palette);
      std::cout << "wrote " << (fs::path(run_dir) / "report.md").string() << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProviderFailure;
  }
  return kExitUsage;
}
