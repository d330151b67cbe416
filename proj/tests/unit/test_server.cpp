#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "ontoforge/ontoforge.h"
#include "paths.hpp"
#include "server.hpp"

using json = nlohmann::json;
using ontoforge::service::ApiServer;

class Server : public ::testing::Test {
 protected:
  std::filesystem::path dir;
  std::unique_ptr<ApiServer> server;
  std::thread thread;
  int port = 0;

  void SetUp() override {
    dir = std::filesystem::temp_directory_path() / ("ontoforge-server-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    start();
  }

  void start() {
    of_corpus* c = nullptr;
    ASSERT_EQ(of_corpus_load(testpaths::source("fixtures/corpus.jsonl").c_str(), &c), OF_OK);
    ontoforge::service::ServerOptions options;
    options.data_dir = dir.string();
    server = std::make_unique<ApiServer>(c, options);
    port = server->bind(0);
    ASSERT_GT(port, 0);
    thread = std::thread([this] { server->run(); });
    server->wait_until_ready();
  }

  void stop() {
    server->stop();
    thread.join();
    server.reset();
  }

  void TearDown() override {
    if (server) stop();
    std::filesystem::remove_all(dir);
  }

  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }

  httplib::Result post(const std::string& path, const json& body) {
    return client().Post(path, body.dump(), "application/json");
  }

  std::string create_session(const json& body = json::object()) {
    auto res = post("/sessions", body);
    EXPECT_EQ(res->status, 201) << res->body;
    return json::parse(res->body)["id"].get<std::string>();
  }
};

TEST_F(Server, HealthAndSeed) {
  auto res = client().Get("/healthz");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["status"], "ok");
  res = client().Get("/seed.owl");
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "text/turtle");
  EXPECT_NE(res->body.find("owl:Class"), std::string::npos);
  res = client().Get("/seed.owl?format=rdfxml");
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/rdf+xml");
  EXPECT_EQ(client().Get("/seed.owl?format=pdf")->status, 400);
}

TEST_F(Server, DecideThenConflict) {
  const std::string id = create_session();
  const std::string base = "/sessions/" + id;
  auto res = post(base + "/decisions", {{"phrase", "wind turbine"}, {"action", "accept_concept"}});
  ASSERT_EQ(res->status, 200) << res->body;
  EXPECT_EQ(json::parse(res->body)["seq"], 1);
  res = post(base + "/decisions", {{"phrase", "wind turbine"}, {"action", "reject"}});
  EXPECT_EQ(res->status, 409);
  EXPECT_EQ(json::parse(res->body)["code"], "already-decided");
  res = post(base + "/decisions", {{"phrase", "no such phrase"}, {"action", "reject"}});
  EXPECT_EQ(res->status, 404);
  res = post(base + "/decisions", {{"phrase", "wind"}, {"action", "teleport"}});
  EXPECT_EQ(res->status, 400);
  res = client().Post(base + "/decisions", "phrase=wind", "application/x-www-form-urlencoded");
  EXPECT_EQ(res->status, 415);
  EXPECT_EQ(client().Get("/sessions/unknown/candidates")->status, 404);
}

TEST_F(Server, PaginationIsStableAndComplete) {
  const std::string id = create_session();
  const std::string base = "/sessions/" + id + "/candidates";
  auto first = json::parse(client().Get(base + "?offset=0&limit=7")->body);
  const long long total = first["total"];
  ASSERT_GT(total, 20);
  std::vector<std::string> phrases;
  for (long long off = 0; off < total; off += 7) {
    auto page = json::parse(client().Get(base + "?offset=" + std::to_string(off) + "&limit=7")->body);
    EXPECT_EQ(page["total"], total);
    for (const auto& item : page["items"]) phrases.push_back(item["phrase"]);
  }
  EXPECT_EQ(static_cast<long long>(phrases.size()), total);
  EXPECT_EQ(phrases[0], "wind");
  auto again = json::parse(client().Get(base + "?offset=0&limit=7")->body);
  EXPECT_EQ(again, first);
  EXPECT_EQ(client().Get(base + "?limit=-1")->status, 400);
  EXPECT_EQ(client().Get(base + "?limit=abc")->status, 400);

  post("/sessions/" + id + "/decisions", {{"phrase", "power"}, {"action", "reject"}});
  auto rejected = json::parse(client().Get(base + "?status=rejected")->body);
  EXPECT_EQ(rejected["total"], 1);
  EXPECT_EQ(rejected["items"][0]["phrase"], "power");
}

TEST_F(Server, CycleIs422AndExportHasClass) {
  const std::string id = create_session();
  const std::string base = "/sessions/" + id;
  post(base + "/decisions", {{"phrase", "anemometer"}, {"action", "accept_concept"}, {"payload", {{"label", "Anemometer"}}}});
  post(base + "/decisions", {{"phrase", "wind speed"}, {"action", "accept_concept"}});
  auto ok = post(base + "/decisions",
                 {{"action", "relate"}, {"payload", {{"kind", "is_a"}, {"source", "anemometer"}, {"target", "wind_speed"}}}});
  EXPECT_EQ(ok->status, 200) << ok->body;
  auto cycle = post(base + "/decisions",
                    {{"action", "relate"}, {"payload", {{"kind", "is_a"}, {"source", "wind_speed"}, {"target", "anemometer"}}}});
  EXPECT_EQ(cycle->status, 422);
  EXPECT_EQ(json::parse(cycle->body)["code"], "is-a-cycle");

  auto onto = json::parse(client().Get(base + "/ontology")->body);
  EXPECT_EQ(onto["concepts"].size(), 2u);
  EXPECT_TRUE(onto["validation"]["ok"].get<bool>());
  auto owl = client().Get(base + "/export.owl");
  EXPECT_EQ(owl->status, 200);
  EXPECT_NE(owl->body.find("anemometer"), std::string::npos);
  EXPECT_NE(owl->body.find("\"Anemometer\""), std::string::npos);
  auto query = json::parse(client().Get(base + "/query?term=anemo")->body);
  EXPECT_EQ(query["matches"].size(), 1u);
}

TEST_F(Server, UndoAndLog) {
  const std::string id = create_session();
  const std::string base = "/sessions/" + id;
  post(base + "/decisions", {{"phrase", "speed"}, {"action", "reject"}});
  auto res = post(base + "/undo", {{"phrase", "speed"}});
  ASSERT_EQ(res->status, 200) << res->body;
  EXPECT_EQ(json::parse(res->body)["seq"], 2);
  EXPECT_EQ(post(base + "/undo", {{"phrase", "speed"}})->status, 409);
  auto log = client().Get(base + "/log");
  EXPECT_EQ(std::count(log->body.begin(), log->body.end(), '\n'), 2);
}

TEST_F(Server, SessionsSurviveRestart) {
  const std::string id = create_session({{"id", "persist1"}, {"from_seed", true}});
  EXPECT_EQ(id, "persist1");
  EXPECT_EQ(post("/sessions", {{"id", "persist1"}})->status, 409);
  post("/sessions/persist1/decisions", {{"phrase", "wind"}, {"action", "reject"}});
  stop();
  start();
  auto info = json::parse(client().Get("/sessions/persist1")->body);
  EXPECT_EQ(info["last_seq"], 1);
  EXPECT_EQ(info["base"], "seed");
  auto list = json::parse(client().Get("/sessions")->body);
  EXPECT_EQ(list["sessions"], json::array({"persist1"}));
}
