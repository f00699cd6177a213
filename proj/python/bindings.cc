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

// Python bindings. Records cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "presup/augment.h"
#include "presup/corpus.h"
#include "presup/errors.h"
#include "presup/evaluate.h"
#include "presup/explain.h"
#include "presup/pipeline.h"
#include "presup/presupgen.h"
#include "presup/scorer.h"
#include "presup/verify.h"

namespace py = pybind11;
using json = nlohmann::ordered_json;

namespace presup {
namespace {

std::string PyGenerate(const std::string &id, const std::string &text, const std::string &ptb,
                     bool projection_guard) {
  GeneratorOptions options;
  options.projection_guard = projection_guard;
  json out = json::array();
  for (const Presupposition &p :
       GeneratePresuppositions(MakeQuestion(id, text, ptb), FactiveLexicon::Default(), options)) {
    out.push_back(ToJson(p));
  }
  return out.dump();
}

VerifierConfig Config(int k, double threshold, const std::string &strategy,
                      const std::string &scorer) {
  VerifierConfig cfg;
  cfg.k = k;
  cfg.decision_threshold = threshold;
  cfg.strategy = ParseStrategy(strategy);
  cfg.scorer = scorer;
  cfg.Validate();
  return cfg;
}

// Verifies one presupposition record against a document record.
std::string PyVerify(const std::string &presupposition, const std::string &document, int k,
                   double threshold, const std::string &strategy, const std::string &scorer) {
  VerifierConfig cfg = Config(k, threshold, strategy, scorer);
  Presupposition p = PresuppositionFromJson(json::parse(presupposition));
  Document doc = DocumentFromJson(json::parse(document));
  std::unique_ptr<Scorer> backend = MakeScorer(cfg.scorer);
  return ToJson(HybridVerify(p, doc, cfg, *backend, FactiveLexicon::Default())).dump();
}

py::object PyExplain(const std::string &presupposition, const std::string &verification) {
  auto e = presup::Explain(PresuppositionFromJson(json::parse(presupposition)),
                           VerificationFromJson(json::parse(verification)));
  if (!e) return py::none();
  return py::str(ToJson(*e).dump());
}

void PyRun(const std::string &questions, const std::string &documents, const std::string &out_dir,
         int k, double threshold, const std::string &strategy, const std::string &scorer,
         size_t max_global_tokens, size_t jobs) {
  PipelineConfig cfg;
  cfg.verifier = Config(k, threshold, strategy, scorer);
  cfg.max_global_tokens = max_global_tokens;
  cfg.jobs = jobs;
  std::vector<Question> qs = ReadQuestions(questions);
  DocumentStore docs = MakeDocumentStore(ReadDocuments(documents));
  std::unique_ptr<Scorer> backend = MakeScorer(cfg.verifier.scorer);
  py::gil_scoped_release release;
  PipelineOutput output = RunPipeline(qs, docs, cfg, *backend, FactiveLexicon::Default());
  WritePipelineOutput(out_dir, qs, output);
}

py::dict PyEvaluate(const std::vector<std::pair<std::string, bool>> &predictions,
                  const std::unordered_map<std::string, bool> &gold) {
  EvalReport r = presup::Evaluate(predictions, gold);
  py::dict out;
  out["n"] = r.n;
  out["accuracy"] = r.accuracy;
  out["macro_f1"] = r.macro_f1;
  out["f1_verifiable"] = r.verifiable.f1;
  out["f1_not_verifiable"] = r.not_verifiable.f1;
  out["confusion"] = r.confusion;
  return out;
}

bool PyClassify(double unanswerable, double long_answer, double short_answer, double yes,
              double no) {
  return ClassifyUnanswerable({unanswerable, long_answer, short_answer, yes, no});
}

}  // namespace
}  // namespace presup

PYBIND11_MODULE(_presup, m) {
  m.doc() = "Presupposition generation, verification and explanation";

  static py::exception<presup::Error> error(m, "PresupError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const presup::Error &e) {
      std::string message = std::string(presup::ErrorCodeName(e.code())) + ": " + e.what();
      error(message.c_str());
    } catch (const nlohmann::json::exception &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("generate_json", &presup::PyGenerate, py::arg("question_id"), py::arg("text"),
        py::arg("ptb"), py::arg("projection_guard") = false);
  m.def("verify_json", &presup::PyVerify, py::arg("presupposition"), py::arg("document"),
        py::arg("k") = 1, py::arg("threshold") = 0.5, py::arg("strategy") = "sentence-nli",
        py::arg("scorer") = "builtin");
  m.def("explain_json", &presup::PyExplain, py::arg("presupposition"), py::arg("verification"));
  m.def("run_pipeline", &presup::PyRun, py::arg("questions"), py::arg("documents"),
        py::arg("out_dir"), py::arg("k") = 1, py::arg("threshold") = 0.5,
        py::arg("strategy") = "sentence-nli", py::arg("scorer") = "builtin",
        py::arg("max_global_tokens") = 300, py::arg("jobs") = 1);
  m.def("evaluate", &presup::PyEvaluate, py::arg("predictions"), py::arg("gold"));
  m.def("yield_text", [](const std::string &ptb) { return presup::YieldText(presup::ParsePtb(ptb)); },
        py::arg("ptb"));
  m.def("lexical_overlap",
        [](const std::string &premise, const std::string &hypothesis) {
          return presup::LexicalScorer().Overlap(premise, hypothesis);
        },
        py::arg("premise"), py::arg("hypothesis"));
  m.def("classify_unanswerable", &presup::PyClassify, py::arg("unanswerable"),
        py::arg("long_answer"), py::arg("short_answer"), py::arg("yes"), py::arg("no"));
}
