#include "wnsynth/commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include "wnsynth/build.hpp"
#include "wnsynth/error.hpp"
#include "wnsynth/review_service.hpp"

namespace wnsynth {

int report_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

int cmd_build(const std::filesystem::path& config, const ConfigOverrides& overrides,
              std::ostream& out, std::ostream& err) {
  try {
    auto cfg = load_config(config);
    apply_overrides(cfg, overrides);
    auto result = run_build(cfg);
    write_build_outputs(result, cfg);
    for (const auto& run : result.runs)
      out << run.tag << ": " << run.wordnet.synset_count() << " synsets ("
          << run.report.count(SynsetStatus::Error) << " errors)\n";
    out << "merged: " << result.merged.synset_count() << " synsets, "
        << coverage_report(result.merged, result.pwn_total).percent_display() << "% coverage\n"
        << "wrote " << (cfg.output_dir / (cfg.name + ".tab")).string() << '\n';
    return kExitOk;
  } catch (...) {
    return report_current_exception(err);
  }
}

int cmd_stats(const std::filesystem::path& export_file, std::optional<std::size_t> pwn_total,
              bool json, std::ostream& out, std::ostream& err) {
  try {
    auto ex = load_export(export_file);
    auto report = coverage_report(ex.wordnet, pwn_total.value_or(kPwn30SynsetCount));
    out << (json ? report.to_json_line() + "\n" : report.to_text());
    return kExitOk;
  } catch (...) {
    return report_current_exception(err);
  }
}

int cmd_sample(const std::filesystem::path& export_file, std::size_t n, std::uint64_t seed,
               const std::filesystem::path& output, std::ostream& out, std::ostream& err) {
  try {
    auto ex = load_export(export_file);
    auto sample = sample_eval_set(ex.wordnet, n, seed);
    std::ofstream f(output, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + output.string());
    write_rating_sheet(f, sample, ex.wordnet.target_lang, ex.header_lines);
    if (!f) throw Error("write failed: " + output.string());
    out << "sampled " << sample.items.size() << " of " << ex.wordnet.synset_count()
        << " synsets (seed " << seed << ") -> " << output.string() << '\n';
    return kExitOk;
  } catch (...) {
    return report_current_exception(err);
  }
}

int cmd_serve(const std::filesystem::path& export_file, const std::filesystem::path& ratings,
              const std::string& bind_address, std::ostream& out, std::ostream& err,
              const std::function<void(ReviewService&, int)>& on_started) {
  try {
    auto colon = bind_address.rfind(':');
    if (colon == std::string::npos) throw ValidationError("bind address must be host:port");
    std::string host = bind_address.substr(0, colon);
    int port = 0;
    auto port_text = std::string_view(bind_address).substr(colon + 1);
    auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
    if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port < 0 || port > 65535)
      throw ValidationError("bad port in bind address '" + bind_address + "'");

    auto ex = load_export(export_file);
    if (ex.wordnet.entries.empty()) throw ValidationError("export has no synsets");
    auto log = std::make_shared<RatingLog>(ratings);
    ReviewService service(std::move(ex), log);
    int bound = service.bind(host, port);
    out << "serving " << export_file.string() << " on http://" << host << ':' << bound << std::endl;
    if (on_started) on_started(service, bound);
    service.run();
    return kExitOk;
  } catch (...) {
    return report_current_exception(err);
  }
}

}  // namespace wnsynth
