#include <httplib.h>

#include <algorithm>
#include <mutex>
#include <semaphore>
#include <thread>

#include "json.hpp"

#include "ontoforge/corpus.hpp"
#include "ontoforge/error.hpp"

namespace ontoforge::corpus {

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // /w/api.php
};

Endpoint split_url(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorKind::invalid_argument, "bad-endpoint", "wiki API URL needs a scheme: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

constexpr int kMaxAttempts = 3;

}  // namespace

struct WikiApiSource::Impl {
  AcquisitionConfig config;
  Endpoint endpoint;
  std::counting_semaphore<64> slots;
  std::mutex pace_mu;
  Clock::time_point next_request{};

  explicit Impl(AcquisitionConfig c)
      : config(std::move(c)),
        endpoint(split_url(config.api_url)),
        slots(static_cast<std::ptrdiff_t>(std::clamp<std::size_t>(config.max_concurrent, 1, 64))) {}

  // Spaces request starts by the configured delay, across all threads.
  void pace() {
    std::unique_lock lock(pace_mu);
    const auto now = Clock::now();
    const auto start = std::max(now, next_request);
    next_request = start + config.request_delay;
    lock.unlock();
    std::this_thread::sleep_until(start);
  }

  httplib::Result get(const std::string& page) {
    httplib::Client client(endpoint.origin);
    client.set_connection_timeout(config.timeout);
    client.set_read_timeout(config.timeout);
    client.set_follow_location(true);
    const httplib::Headers headers = {{"User-Agent", config.user_agent}, {"Accept", "application/json"}};
    const httplib::Params params = {{"action", "parse"},   {"page", page},           {"prop", "wikitext"},
                                    {"format", "json"},    {"formatversion", "2"},   {"redirects", "1"}};
    return client.Get(endpoint.path, params, headers);
  }
};

WikiApiSource::WikiApiSource(AcquisitionConfig config) {
  if (config.api_url.empty()) {
    throw Error(ErrorKind::invalid_argument, "no-endpoint", "live mode needs a wiki API URL (ONTOFORGE_WIKI_API)");
  }
  if (config.user_agent.empty()) {
    throw Error(ErrorKind::invalid_argument, "missing-user-agent", "live mode needs a user-agent string");
  }
  impl_ = std::make_unique<Impl>(std::move(config));
}

WikiApiSource::~WikiApiSource() = default;

Article WikiApiSource::fetch(const std::string& raw_slug) {
  if (raw_slug.empty()) throw Error(ErrorKind::invalid_argument, "empty-slug", "page identifier must not be empty");
  const std::string slug = slugify(percent_decode(raw_slug));
  std::string last_error;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    impl_->slots.acquire();
    impl_->pace();
    httplib::Result res = impl_->get(slug);
    impl_->slots.release();
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 404) throw Error(ErrorKind::not_found, "page-not-found", "no such page: " + slug);
    if (res->status >= 500 || res->status == 429) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw Error(ErrorKind::network, "network-failure", "HTTP " + std::to_string(res->status) + " for " + slug);
    }
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::network, "network-failure", std::string("unparseable API response: ") + e.what());
    }
    if (body.contains("error")) {
      const std::string code = body["error"].value("code", "");
      if (code == "missingtitle" || code == "invalidtitle" || code == "nosuchpageid") {
        throw Error(ErrorKind::not_found, "page-not-found", "no such page: " + slug);
      }
      throw Error(ErrorKind::network, "network-failure", "API error " + code + " for " + slug);
    }
    const nlohmann::json& parse = body.value("parse", nlohmann::json::object());
    std::string wikitext;
    if (parse.contains("wikitext") && parse["wikitext"].is_string()) {
      wikitext = parse["wikitext"].get<std::string>();
    } else if (parse.contains("wikitext") && parse["wikitext"].is_object()) {
      wikitext = parse["wikitext"].value("*", "");  // formatversion=1 shape
    } else {
      throw Error(ErrorKind::network, "network-failure", "API response without wikitext for " + slug);
    }
    const std::string title = parse.value("title", slug);
    return article_from_wikitext(slug, title, wikitext, SourceKind::live, now_utc());
  }
  throw Error(ErrorKind::network, "network-failure", "fetching " + slug + " failed: " + last_error);
}

}  // namespace ontoforge::corpus
