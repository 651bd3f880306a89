#include "wnsynth/review_service.hpp"

#include <httplib.h>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <ctime>

#include "wnsynth/error.hpp"

namespace wnsynth {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kDefaultPageSize = 50;
constexpr std::size_t kMaxPageSize = 1000;

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<std::size_t> parse_count(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

void send_json(httplib::Response& res, int status, const ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, status, ordered_json{{"error", message}});
}

ordered_json score_json(const ScoreSummary& summary, const OffsetPos& id) {
  auto it = summary.per_synset.find(id);
  if (it == summary.per_synset.end()) return {{"count", 0}, {"mean", nullptr}};
  return {{"count", it->second.count}, {"mean", it->second.mean.to_fixed(2)}};
}

}  // namespace

std::string to_json_line(const RatingRecord& r) {
  ordered_json j;
  j["offsetPos"] = r.id.str();
  j["targetLang"] = r.target_lang;
  j["words"] = r.words;
  j["score"] = r.score;
  j["comment"] = r.comment ? ordered_json(*r.comment) : ordered_json(nullptr);
  j["rater"] = r.rater;
  j["timestamp"] = r.timestamp;
  return j.dump();
}

RatingRecord rating_from_json_line(std::string_view line) {
  try {
    auto j = nlohmann::json::parse(line);
    auto id = OffsetPos::parse(j.at("offsetPos").get<std::string>());
    if (!id) throw ParseError("malformed offsetPos in rating record");
    RatingRecord r{*id,
                   j.at("targetLang").get<std::string>(),
                   j.at("words").get<std::vector<std::string>>(),
                   j.at("score").get<int>(),
                   std::nullopt,
                   j.at("rater").get<std::string>(),
                   j.at("timestamp").get<std::string>()};
    if (j.contains("comment") && !j["comment"].is_null()) r.comment = j["comment"].get<std::string>();
    if (r.score < 1 || r.score > 5) throw ValidationError("rating score outside 1..5");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed rating record: ") + e.what());
  }
}

RatingLog::RatingLog(std::filesystem::path path) : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) throw Error("cannot read ratings log " + path_.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        records_.push_back(rating_from_json_line(line));
      } catch (const Error& e) {
        throw ParseError(path_.string() + ": " + e.what(), line_no);
      }
    }
  }
  out_.open(path_, std::ios::binary | std::ios::app);
  if (!out_) throw Error("cannot open ratings log for append: " + path_.string());
}

void RatingLog::append(const RatingRecord& record) {
  std::lock_guard lock(mutex_);
  out_ << to_json_line(record) << '\n';
  out_.flush();
  if (!out_) throw Error("write failed: " + path_.string());
  records_.push_back(record);
}

std::vector<RatingRecord> RatingLog::records() const {
  std::lock_guard lock(mutex_);
  return records_;
}

std::vector<Rating> RatingLog::ratings() const {
  std::lock_guard lock(mutex_);
  std::vector<Rating> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back({r.id, r.score});
  return out;
}

ReviewService::ReviewService(ExportedWordnet data, std::shared_ptr<RatingLog> log)
    : data_(std::move(data)), log_(std::move(log)), server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

ReviewService::~ReviewService() { stop(); }

int ReviewService::bind(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound <= 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void ReviewService::run() { server_->listen_after_bind(); }

void ReviewService::stop() {
  if (server_ && server_->is_running()) server_->stop();
}

void ReviewService::install_routes() {
  auto& srv = *server_;
  const auto& entries = data_.wordnet.entries;

  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  srv.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, {{"status", "ok"}});
  });

  srv.Get("/api/synsets", [this, &entries](const httplib::Request& req, httplib::Response& res) {
    std::size_t offset = 0;
    std::size_t limit = kDefaultPageSize;
    if (req.has_param("offset")) {
      auto v = parse_count(req.get_param_value("offset"));
      if (!v) return send_error(res, 400, "offset must be a non-negative integer");
      offset = *v;
    }
    if (req.has_param("limit")) {
      auto v = parse_count(req.get_param_value("limit"));
      if (!v || *v == 0 || *v > kMaxPageSize)
        return send_error(res, 400, "limit must be an integer in 1.." + std::to_string(kMaxPageSize));
      limit = *v;
    }

    auto ratings = log_->ratings();
    auto summary = aggregate_scores(ratings);
    ordered_json items = ordered_json::array();
    auto it = entries.begin();
    std::advance(it, std::min(offset, entries.size()));
    for (std::size_t n = 0; it != entries.end() && n < limit; ++it, ++n)
      items.push_back({{"id", it->first.str()}, {"words", it->second.words},
                       {"rating", score_json(summary, it->first)}});

    ordered_json body;
    body["items"] = std::move(items);
    body["offset"] = offset;
    body["limit"] = limit;
    body["total"] = entries.size();
    body["next"] = offset + limit < entries.size() ? ordered_json(offset + limit) : ordered_json(nullptr);
    send_json(res, 200, body);
  });

  srv.Get(R"(/api/synsets/([^/]+))", [this, &entries](const httplib::Request& req, httplib::Response& res) {
    auto id = OffsetPos::parse(req.matches[1].str());
    if (!id) return send_error(res, 400, "malformed offset-pos");
    auto it = entries.find(*id);
    if (it == entries.end()) return send_error(res, 404, "unknown synset " + id->str());

    ordered_json provenance = ordered_json::array();
    for (const auto& p : it->second.provenance) {
      const auto& c = p.candidate;
      provenance.push_back({{"word", c.word},
                            {"run", p.run_tag},
                            {"case", to_string(p.selection)},
                            {"occur", c.occur},
                            {"numDstWordnets", c.num_dst_wordnets},
                            {"rank", std::to_string(c.rank.num()) + "/" + std::to_string(c.rank.den())},
                            {"rankDisplay", c.rank_display()}});
    }
    auto ratings = log_->ratings();
    auto summary = aggregate_scores(ratings);
    ordered_json body;
    body["id"] = id->str();
    body["lang"] = data_.wordnet.target_lang;
    body["words"] = it->second.words;
    body["provenance"] = std::move(provenance);
    body["rating"] = score_json(summary, *id);
    send_json(res, 200, body);
  });

  srv.Post("/api/ratings", [this, &entries](const httplib::Request& req, httplib::Response& res) {
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::exception&) {
      return send_error(res, 400, "request body is not JSON");
    }
    if (!body.is_object()) return send_error(res, 400, "request body must be an object");

    if (!body.contains("offsetPos") || !body["offsetPos"].is_string())
      return send_error(res, 422, "offsetPos is required");
    auto id = OffsetPos::parse(body["offsetPos"].get<std::string>());
    if (!id) return send_error(res, 422, "malformed offsetPos");
    if (!body.contains("score") || !body["score"].is_number_integer())
      return send_error(res, 422, "score must be an integer");
    auto score = body["score"].get<long long>();
    if (score < 1 || score > 5) return send_error(res, 422, "score must be between 1 and 5");
    if (!body.contains("rater") || !body["rater"].is_string() || body["rater"].get<std::string>().empty())
      return send_error(res, 422, "rater is required");
    std::optional<std::string> comment;
    if (body.contains("comment") && !body["comment"].is_null()) {
      if (!body["comment"].is_string()) return send_error(res, 422, "comment must be a string");
      comment = body["comment"].get<std::string>();
    }

    auto it = entries.find(*id);
    if (it == entries.end()) return send_error(res, 404, "unknown synset " + id->str());

    RatingRecord record{*id, data_.wordnet.target_lang, it->second.words, static_cast<int>(score),
                        std::move(comment), body["rater"].get<std::string>(), utc_timestamp()};
    try {
      log_->append(record);
    } catch (const Error& e) {
      return send_error(res, 500, e.what());
    }
    res.status = 201;
    res.set_content(to_json_line(record), "application/json");
  });

  srv.Get("/api/stats", [this](const httplib::Request&, httplib::Response& res) {
    auto ratings = log_->ratings();
    auto summary = aggregate_scores(ratings);
    ordered_json synsets = ordered_json::array();
    for (const auto& [id, s] : summary.per_synset)
      synsets.push_back({{"id", id.str()}, {"count", s.count}, {"mean", s.mean.to_fixed(2)}});
    ordered_json body;
    body["overall"] = summary.overall ? ordered_json(summary.overall->to_fixed(2)) : ordered_json(nullptr);
    body["ratingCount"] = summary.rating_count;
    body["ratedSynsets"] = summary.per_synset.size();
    body["synsets"] = std::move(synsets);
    send_json(res, 200, body);
  });
}

}  // namespace wnsynth
