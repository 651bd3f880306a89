#include <CLI11.hpp>

#include <csignal>
#include <iostream>

#include "wnsynth/commands.hpp"
#include "wnsynth/lexicon.hpp"
#include "wnsynth/review_service.hpp"

namespace {

wnsynth::ReviewService* g_service = nullptr;

void handle_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wnsynth: synthesize wordnet synsets for a target language"};
  app.require_subcommand(1);

  std::string config;
  std::string approach;
  wnsynth::ConfigOverrides overrides;
  std::string out_dir;
  auto* build = app.add_subcommand("build", "generate, rank, select, merge and export");
  build->add_option("config", config, "JSON run configuration")->required()->check(CLI::ExistingFile);
  build->add_option("--approach", approach, "only run DR, IW or IWND")
      ->check(CLI::IsMember({"DR", "IW", "IWND"}));
  build->add_option("--target", overrides.target_lang, "target language (ISO 639-3)");
  build->add_option("--seed", overrides.seed, "seed recorded in artifacts");
  build->add_option("--workers", overrides.workers, "parallel synset workers")->check(CLI::PositiveNumber);
  build->add_option("--out", out_dir, "output directory");

  std::string export_file;
  std::optional<std::size_t> pwn_total;
  bool json = false;
  auto* stats = app.add_subcommand("stats", "synset count and coverage of an export");
  stats->add_option("export", export_file, "tab export")->required();
  stats->add_option("--pwn-total", pwn_total, "PWN synset total (default 117659)")->check(CLI::PositiveNumber);
  stats->add_flag("--json", json, "print one JSON line");

  std::size_t n = 500;
  std::uint64_t seed = 0;
  std::string output;
  auto* sample = app.add_subcommand("sample", "draw a rating sheet of random synsets");
  sample->add_option("export", export_file, "tab export")->required();
  sample->add_option("-n,--size", n, "sample size")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("-o,--output", output, "rating sheet path")->required();

  std::string ratings;
  std::string bind = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "run the review API");
  serve->add_option("export", export_file, "tab export")->required();
  serve->add_option("--ratings", ratings, "ratings log (JSON lines)")->required();
  serve->add_option("--bind", bind, "host:port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? wnsynth::kExitOk : wnsynth::kExitInputError;
  }

  if (*build) {
    if (!approach.empty()) overrides.approach = wnsynth::approach_from_string(approach);
    if (!out_dir.empty()) overrides.output_dir = out_dir;
    return wnsynth::cmd_build(config, overrides, std::cout, std::cerr);
  }
  if (*stats) return wnsynth::cmd_stats(export_file, pwn_total, json, std::cout, std::cerr);
  if (*sample) return wnsynth::cmd_sample(export_file, n, seed, output, std::cout, std::cerr);
  if (*serve) {
    return wnsynth::cmd_serve(export_file, ratings, bind, std::cout, std::cerr,
                              [](wnsynth::ReviewService& service, int) {
                                g_service = &service;
                                std::signal(SIGINT, handle_signal);
                                std::signal(SIGTERM, handle_signal);
                              });
  }
  return wnsynth::kExitInputError;
}
