#include <gtest/gtest.h>
#include <httplib.h>

#include <atomic>
#include <thread>

#include "json.hpp"
#include "ontoforge/corpus.hpp"
#include "ontoforge/error.hpp"
#include "paths.hpp"

using namespace ontoforge;
using namespace ontoforge::corpus;

namespace {

AcquisitionConfig fixture_config(const std::string& rel = "fixtures/wiki") {
  AcquisitionConfig c;
  c.source = SourceKind::fixture;
  c.fixture_dir = testpaths::source(rel);
  return c;
}

template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Corpus, FixtureSeedAndAllLinks) {
  const Corpus c = build_corpus("wind_power", fixture_config());
  EXPECT_EQ(c.seed, "wind_power");
  EXPECT_EQ(c.articles.size(), 9u);
  EXPECT_TRUE(c.failures.empty());
  const Article& seed = c.seed_article();
  EXPECT_EQ(seed.title, "Wind power");
  EXPECT_EQ(seed.links.size(), 8u);
  for (const auto& link : seed.links) EXPECT_TRUE(c.articles.count(link)) << link;
  EXPECT_EQ(seed.text.find("[["), std::string::npos);
  EXPECT_EQ(seed.text.find("{{"), std::string::npos);
}

TEST(Corpus, MatchesFrozenFixtureFile) {
  const Corpus fresh = build_corpus("wind_power", fixture_config());
  const Corpus frozen = load_fixture_corpus(testpaths::source("fixtures/corpus.jsonl"));
  EXPECT_TRUE(structurally_equal(fresh, frozen));
  EXPECT_EQ(fresh.content_digest(), frozen.content_digest());
  EXPECT_TRUE(frozen.warnings.empty());
}

TEST(Corpus, MissingLinkIsRecordedNotFatal) {
  const Corpus c = build_corpus("kite_power", fixture_config("tests/data/wiki_missing"));
  ASSERT_EQ(c.failures.size(), 1u);
  EXPECT_EQ(c.failures[0].slug, "airspeed_sensor");
  EXPECT_EQ(c.failures[0].code, "page-not-found");
  EXPECT_EQ(c.articles.size(), 5u);
}

TEST(Corpus, MissingSeedThrows) {
  EXPECT_EQ(error_code_of([] { build_corpus("no_such_page", fixture_config()); }), "seed-fetch-failure");
  EXPECT_EQ(error_code_of([] { build_corpus("", fixture_config()); }), "empty-slug");
}

TEST(Corpus, LinkLimitTruncatesWithWarning) {
  AcquisitionConfig cfg = fixture_config();
  cfg.max_links = 3;
  const Corpus c = build_corpus("wind_power", cfg);
  EXPECT_EQ(c.articles.size(), 4u);
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_EQ(c.warnings[0].rfind("limit-exceeded", 0), 0u);
}

TEST(Corpus, SerializeRoundTrip) {
  const Corpus c = build_corpus("kite_power", fixture_config("tests/data/wiki_missing"));
  const std::string text = serialize_corpus(c);
  const Corpus back = parse_corpus(text);
  EXPECT_TRUE(structurally_equal(c, back));
  EXPECT_EQ(serialize_corpus(back), text);
}

TEST(Corpus, MalformedRecordNamesLine) {
  std::string text = serialize_corpus(build_corpus("wind_power", fixture_config()));
  const std::size_t second_nl = text.find('\n', text.find('\n') + 1);
  text.insert(second_nl + 1, "{\"slug\": \n");
  try {
    parse_corpus(text);
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "malformed-record");
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Corpus, DigestMismatchIsAWarning) {
  std::string text = serialize_corpus(build_corpus("wind_power", fixture_config()));
  const std::size_t pos = text.find("moving air");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 10, "still air!");
  const Corpus c = parse_corpus(text);
  ASSERT_FALSE(c.warnings.empty());
}

TEST(Corpus, ConfigDigestIgnoresTransportKnobs) {
  AcquisitionConfig a = fixture_config(), b = fixture_config();
  b.max_concurrent = 7;
  b.request_delay = std::chrono::milliseconds(1);
  EXPECT_EQ(a.digest(), b.digest());
  b.max_links = 2;
  EXPECT_NE(a.digest(), b.digest());
}

// A tiny stand-in for the MediaWiki action API.
class MockWiki : public ::testing::Test {
 protected:
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> in_flight{0}, peak{0}, requests{0}, flaky_left{1};
  std::string last_agent;
  std::mutex agent_mu;

  void SetUp() override {
    server.Get("/w/api.php", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests;
      const int now = ++in_flight;
      for (int p = peak; now > p && !peak.compare_exchange_weak(p, now);) {
      }
      {
        std::lock_guard lock(agent_mu);
        last_agent = req.get_header_value("User-Agent");
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(30));
      --in_flight;
      const std::string page = req.get_param_value("page");
      if (req.get_param_value("action") != "parse" || req.get_param_value("prop") != "wikitext") {
        res.status = 400;
        return;
      }
      nlohmann::json body;
      if (page == "flaky" && flaky_left-- > 0) {
        res.status = 503;
        return;
      }
      if (page == "hub") {
        body = {{"parse", {{"title", "Hub"}, {"wikitext", "Links [[a]] [[b]] [[c]] [[d]] [[gone]] [[flaky]]."}}}};
      } else if (page == "gone") {
        body = {{"error", {{"code", "missingtitle"}, {"info", "The page you specified doesn't exist."}}}};
      } else {
        body = {{"parse", {{"title", page}, {"wikitext", "Text of '''" + page + "''' with [[hub]]."}}}};
      }
      res.set_content(body.dump(), "application/json");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  void TearDown() override {
    server.stop();
    thread.join();
  }

  AcquisitionConfig live() const {
    AcquisitionConfig c;
    c.source = SourceKind::live;
    c.api_url = "http://127.0.0.1:" + std::to_string(port) + "/w/api.php";
    c.user_agent = "ontoforge-tests/1.0 (test@example.org)";
    c.max_concurrent = 2;
    c.request_delay = std::chrono::milliseconds(0);
    c.timeout = std::chrono::seconds(5);
    return c;
  }
};

TEST_F(MockWiki, LiveBuildRecordsFailuresAndRetries) {
  const Corpus c = build_corpus("hub", live());
  EXPECT_EQ(c.articles.size(), 6u);  // hub, a..d, flaky
  ASSERT_EQ(c.failures.size(), 1u);
  EXPECT_EQ(c.failures[0].slug, "gone");
  EXPECT_EQ(c.failures[0].code, "page-not-found");
  EXPECT_TRUE(c.articles.count("flaky"));
  EXPECT_EQ(c.articles.at("a").source, SourceKind::live);
  EXPECT_EQ(c.articles.at("a").text, "Text of a with hub.");
  EXPECT_LE(peak.load(), 2);
  std::lock_guard lock(agent_mu);
  EXPECT_EQ(last_agent, "ontoforge-tests/1.0 (test@example.org)");
}

TEST_F(MockWiki, ConcurrencyCapOfOneIsSerial) {
  AcquisitionConfig cfg = live();
  cfg.max_concurrent = 1;
  build_corpus("hub", cfg);
  EXPECT_EQ(peak.load(), 1);
}

TEST_F(MockWiki, UserAgentIsMandatory) {
  AcquisitionConfig cfg = live();
  cfg.user_agent.clear();
  EXPECT_EQ(error_code_of([&] { build_corpus("hub", cfg); }), "missing-user-agent");
  EXPECT_EQ(requests.load(), 0);
}

TEST(CorpusLive, UnreachableHostIsNetworkFailure) {
  AcquisitionConfig cfg;
  cfg.source = SourceKind::live;
  cfg.api_url = "http://127.0.0.1:1/w/api.php";
  cfg.user_agent = "ontoforge-tests/1.0";
  cfg.request_delay = std::chrono::milliseconds(0);
  cfg.timeout = std::chrono::seconds(1);
  WikiApiSource source(cfg);
  try {
    source.fetch("x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "network-failure");
    EXPECT_EQ(e.kind(), ErrorKind::network);
  }
}
