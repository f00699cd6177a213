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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <httplib.h>
#include <json.hpp>

#include "presup/errors.h"

namespace presup {

using json = nlohmann::ordered_json;

std::string_view ScoreModeName(ScoreMode mode) {
  return mode == ScoreMode::kJoint ? "joint" : "independent";
}

ScoreMode ParseScoreMode(std::string_view name) {
  if (name == "independent") return ScoreMode::kIndependent;
  if (name == "joint") return ScoreMode::kJoint;
  throw Error(ErrorCode::kProtocolError, "unknown score mode '" + std::string(name) + "'");
}

std::vector<std::string> LexicalTokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    // Bytes >= 0x80 are kept so UTF-8 words stay whole.
    if (std::isalnum(u) || u >= 0x80) {
      current.push_back(static_cast<char>(std::tolower(u)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> ContentTokens(std::string_view text, const WordList &stopwords) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (std::string &token : LexicalTokens(text)) {
    if (stopwords.Contains(token) || !seen.insert(token).second) continue;
    out.push_back(std::move(token));
  }
  return out;
}

double LexicalScorer::Overlap(std::string_view premise, std::string_view hypothesis) const {
  std::vector<std::string> wanted = ContentTokens(hypothesis, stopwords_);
  if (wanted.empty()) return 0.0;
  std::vector<std::string> premise_tokens = LexicalTokens(premise);
  std::unordered_set<std::string> have(premise_tokens.begin(), premise_tokens.end());
  size_t covered = std::count_if(wanted.begin(), wanted.end(),
                                 [&have](const std::string &t) { return have.count(t) > 0; });
  return std::clamp(static_cast<double>(covered) / static_cast<double>(wanted.size()), 0.0, 1.0);
}

std::vector<double> LexicalScorer::Score(const std::vector<PremiseHypothesis> &pairs,
                                         ScoreMode /*mode*/) const {
  std::vector<double> scores;
  scores.reserve(pairs.size());
  for (const PremiseHypothesis &pair : pairs) {
    scores.push_back(Overlap(pair.premise, pair.hypothesis));
  }
  return scores;
}

std::string EncodeScoreRequest(const std::vector<PremiseHypothesis> &pairs, ScoreMode mode) {
  json body;
  body["pairs"] = json::array();
  for (const PremiseHypothesis &pair : pairs) {
    body["pairs"].push_back({{"premise", pair.premise}, {"hypothesis", pair.hypothesis}});
  }
  body["mode"] = std::string(ScoreModeName(mode));
  return body.dump();
}

ScoreRequest DecodeScoreRequest(std::string_view body) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw Error(ErrorCode::kProtocolError, "request is not a JSON object");
  }
  if (!parsed.contains("pairs") || !parsed["pairs"].is_array()) {
    throw Error(ErrorCode::kProtocolError, "request lacks a 'pairs' array");
  }
  ScoreRequest request;
  if (parsed.contains("mode")) {
    if (!parsed["mode"].is_string()) {
      throw Error(ErrorCode::kProtocolError, "'mode' must be a string");
    }
    request.mode = ParseScoreMode(parsed["mode"].get<std::string>());
  }
  for (const json &pair : parsed["pairs"]) {
    if (!pair.is_object() || !pair.contains("premise") || !pair.contains("hypothesis") ||
        !pair["premise"].is_string() || !pair["hypothesis"].is_string()) {
      throw Error(ErrorCode::kProtocolError, "malformed pair in request");
    }
    request.pairs.push_back(
        {pair["premise"].get<std::string>(), pair["hypothesis"].get<std::string>()});
  }
  return request;
}

std::string EncodeScoreResponse(const std::vector<double> &scores) {
  json body;
  body["scores"] = json::array();
  for (double score : scores) body["scores"].push_back({{"entail_prob", score}});
  return body.dump();
}

std::vector<double> DecodeScoreResponse(std::string_view body, size_t expected) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("scores") ||
      !parsed["scores"].is_array()) {
    throw Error(ErrorCode::kProtocolError, "response lacks a 'scores' array");
  }
  const json &scores = parsed["scores"];
  if (scores.size() != expected) {
    throw Error(ErrorCode::kProtocolError,
                "expected " + std::to_string(expected) + " scores, got " +
                    std::to_string(scores.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json &score : scores) {
    if (!score.is_object() || !score.contains("entail_prob") ||
        !score["entail_prob"].is_number()) {
      throw Error(ErrorCode::kProtocolError, "malformed score entry");
    }
    double p = score["entail_prob"].get<double>();
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw Error(ErrorCode::kProtocolError, "entail_prob outside [0, 1]");
    }
    out.push_back(p);
  }
  return out;
}

HttpScorer::HttpScorer(std::string base_url, int timeout_seconds)
    : base_url_(std::move(base_url)), timeout_seconds_(timeout_seconds) {
  size_t scheme = base_url_.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::kInputFormat, "scorer URL needs a scheme: " + base_url_);
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (base_url_.rfind("https://", 0) == 0) {
    throw Error(ErrorCode::kScorerUnavailable, "built without TLS support: " + base_url_);
  }
#endif
  size_t path = base_url_.find('/', scheme + 3);
  host_ = base_url_.substr(0, path);
  prefix_ = path == std::string::npos ? "" : base_url_.substr(path);
  while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
}

std::vector<double> HttpScorer::Score(const std::vector<PremiseHypothesis> &pairs,
                                      ScoreMode mode) const {
  if (pairs.empty()) return {};
  // A client per call keeps concurrent callers independent.
  httplib::Client client(host_);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  auto response = client.Post(prefix_ + "/v1/score", EncodeScoreRequest(pairs, mode),
                              "application/json");
  if (!response) {
    throw Error(ErrorCode::kScorerUnavailable,
                "scorer " + base_url_ + " unreachable: " + httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw Error(ErrorCode::kScorerUnavailable,
                "scorer " + base_url_ + " returned HTTP " + std::to_string(response->status));
  }
  return DecodeScoreResponse(response->body, pairs.size());
}

std::unique_ptr<Scorer> MakeScorer(const std::string &descriptor) {
  if (descriptor.empty() || descriptor == "builtin") {
    return std::make_unique<LexicalScorer>();
  }
  if (descriptor.rfind("http://", 0) == 0 || descriptor.rfind("https://", 0) == 0) {
    return std::make_unique<HttpScorer>(descriptor);
  }
  throw Error(ErrorCode::kInputFormat, "unknown scorer '" + descriptor + "'");
}

size_t ServeScoreLines(std::istream &in, std::ostream &out, const Scorer &scorer) {
  size_t malformed = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      ScoreRequest request = DecodeScoreRequest(line);
      out << EncodeScoreResponse(scorer.Score(request.pairs, request.mode)) << "\n";
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kProtocolError) throw;
      ++malformed;
      out << json{{"error", e.what()}}.dump() << "\n";
    }
  }
  out.flush();
  return malformed;
}

}  // namespace presup
