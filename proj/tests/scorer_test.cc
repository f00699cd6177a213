// Copyright 2026 The presupqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "presup/scorer.h"

#include <sstream>
#include <thread>

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include "presup/errors.h"

namespace presup {
namespace {

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

// Serves /v1/score on a loopback port with a caller-supplied handler.
class FakeScorerService {
 public:
  explicit FakeScorerService(httplib::Server::Handler handler) {
    server_.Post("/v1/score", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeScorerService() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_CASE("builtin scorer overlap") {
  LexicalScorer scorer;
  CHECK(scorer.Overlap("the sun rotates", "the sun rotates") == doctest::Approx(1.0));
  CHECK(scorer.Overlap("quarterly earnings rose", "the sun rotates") == doctest::Approx(0.0));
  CHECK(scorer.Overlap("the sun slowly rotates on its axis", "the sun rotates") ==
        doctest::Approx(1.0));
  CHECK(scorer.Overlap("the sun is hot", "the sun rotates") == doctest::Approx(0.5));
  CHECK(scorer.Overlap("anything", "the of a") == 0.0);
  CHECK(scorer.Overlap("Ecuador's FLAG", "'ecuador' has 'flag'") == doctest::Approx(1.0));
}

TEST_CASE("tokenizers") {
  CHECK(LexicalTokens("It's a Hard-Knock life!") ==
        std::vector<std::string>{"it", "s", "a", "hard", "knock", "life"});
  CHECK(ContentTokens("the sun and the sun rotates", DefaultStopwords()) ==
        std::vector<std::string>{"sun", "rotates"});
}

TEST_CASE("score mode names") {
  CHECK(ScoreModeName(ScoreMode::kJoint) == "joint");
  CHECK(ParseScoreMode("independent") == ScoreMode::kIndependent);
  CHECK(CodeOf([] { ParseScoreMode("bogus"); }) == ErrorCode::kProtocolError);
}

TEST_CASE("wire format is bit-exact") {
  std::string body = EncodeScoreRequest({{"p1", "h"}, {"p2", "h"}}, ScoreMode::kIndependent);
  CHECK(body ==
        R"({"pairs":[{"premise":"p1","hypothesis":"h"},{"premise":"p2","hypothesis":"h"}],"mode":"independent"})");
  ScoreRequest decoded = DecodeScoreRequest(body);
  REQUIRE(decoded.pairs.size() == 2);
  CHECK(decoded.pairs[1].premise == "p2");
  CHECK(decoded.mode == ScoreMode::kIndependent);
  CHECK(EncodeScoreResponse({1.0, 0.25}) == R"({"scores":[{"entail_prob":1.0},{"entail_prob":0.25}]})");
  CHECK(DecodeScoreResponse(R"({"scores":[{"entail_prob":1},{"entail_prob":0.5}]})", 2) ==
        std::vector<double>{1.0, 0.5});
}

TEST_CASE("malformed wire messages") {
  CHECK(CodeOf([] { DecodeScoreRequest("{"); }) == ErrorCode::kProtocolError);
  CHECK(CodeOf([] { DecodeScoreRequest(R"({"pairs":[{"premise":"p"}],"mode":"joint"})"); }) ==
        ErrorCode::kProtocolError);
  CHECK(CodeOf([] { DecodeScoreResponse(R"({"scores":[]})", 1); }) == ErrorCode::kProtocolError);
  CHECK(CodeOf([] { DecodeScoreResponse(R"({"scores":[{"entail_prob":"x"}]})", 1); }) ==
        ErrorCode::kProtocolError);
  CHECK(CodeOf([] { DecodeScoreResponse(R"({"scores":[{"entail_prob":1.5}]})", 1); }) ==
        ErrorCode::kProtocolError);
  CHECK(CodeOf([] { DecodeScoreResponse("not json", 1); }) == ErrorCode::kProtocolError);
}

TEST_CASE("http scorer against a live service") {
  FakeScorerService service([](const httplib::Request &req, httplib::Response &res) {
    ScoreRequest request = DecodeScoreRequest(req.body);
    std::vector<double> scores;
    for (size_t i = 0; i < request.pairs.size(); ++i) scores.push_back(i % 2 ? 0.0 : 0.9);
    res.set_content(EncodeScoreResponse(scores), "application/json");
  });
  HttpScorer scorer(service.url(), 5);
  std::vector<PremiseHypothesis> pairs = {{"a", "h"}, {"b", "h"}, {"c", "h"}};
  CHECK(scorer.Score(pairs, ScoreMode::kJoint) == std::vector<double>{0.9, 0.0, 0.9});
  CHECK(scorer.Score({}, ScoreMode::kIndependent).empty());
  CHECK(MakeScorer(service.url())->Describe() == service.url());
}

TEST_CASE("http scorer error mapping") {
  SUBCASE("server error") {
    FakeScorerService service([](const httplib::Request &, httplib::Response &res) {
      res.status = 500;
    });
    HttpScorer scorer(service.url(), 5);
    CHECK(CodeOf([&] { scorer.Score({{"a", "h"}}, ScoreMode::kIndependent); }) ==
          ErrorCode::kScorerUnavailable);
  }
  SUBCASE("malformed reply") {
    FakeScorerService service([](const httplib::Request &, httplib::Response &res) {
      res.set_content(R"({"scores":[{"entail_prob":0.1}]})", "application/json");
    });
    HttpScorer scorer(service.url(), 5);
    CHECK(CodeOf([&] { scorer.Score({{"a", "h"}, {"b", "h"}}, ScoreMode::kIndependent); }) ==
          ErrorCode::kProtocolError);
  }
  SUBCASE("service down") {
    std::string url;
    {
      FakeScorerService service([](const httplib::Request &, httplib::Response &) {});
      url = service.url();
    }
    HttpScorer scorer(url, 2);
    CHECK(CodeOf([&] { scorer.Score({{"a", "h"}}, ScoreMode::kIndependent); }) ==
          ErrorCode::kScorerUnavailable);
  }
}

TEST_CASE("make scorer") {
  CHECK(MakeScorer("builtin")->Describe() == "builtin");
  CHECK(CodeOf([] { MakeScorer("ftp://x"); }) == ErrorCode::kInputFormat);
}

TEST_CASE("offline line protocol") {
  std::istringstream in(
      R"({"pairs":[{"premise":"the sun rotates","hypothesis":"the sun rotates"},{"premise":"x","hypothesis":"the sun rotates"}],"mode":"independent"})"
      "\n\n{\n"
      R"({"pairs":[],"mode":"joint"})"
      "\n");
  std::ostringstream out;
  CHECK(ServeScoreLines(in, out, LexicalScorer()) == 1);
  std::istringstream lines(out.str());
  std::string line;
  std::vector<std::string> got;
  while (std::getline(lines, line)) got.push_back(line);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == R"({"scores":[{"entail_prob":1.0},{"entail_prob":0.0}]})");
  CHECK(nlohmann::json::parse(got[1]).contains("error"));
  CHECK(got[2] == R"({"scores":[]})");
}

}  // namespace
}  // namespace presup
