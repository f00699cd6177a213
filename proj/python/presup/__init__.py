# Copyright 2026 The presupqa Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Presupposition generation, verification and explanation for QA."""

import json

from ._presup import (
    PresupError,
    classify_unanswerable,
    evaluate,
    lexical_overlap,
    run_pipeline,
    yield_text,
)
from . import _presup

__all__ = [
    "PresupError",
    "classify_unanswerable",
    "evaluate",
    "explain",
    "generate",
    "lexical_overlap",
    "run_pipeline",
    "verify",
    "yield_text",
]


def generate(question_id, text, ptb, projection_guard=False):
    """Presupposition records for one parsed question."""
    return json.loads(_presup.generate_json(question_id, text, ptb, projection_guard))


def verify(presupposition, document, k=1, threshold=0.5, strategy="sentence-nli",
           scorer="builtin"):
    """Verification record for a presupposition record against a document record."""
    return json.loads(_presup.verify_json(json.dumps(presupposition), json.dumps(document),
                                          k, threshold, strategy, scorer))


def explain(presupposition, verification):
    """Explanation record, or None when the presupposition was verified."""
    out = _presup.explain_json(json.dumps(presupposition), json.dumps(verification))
    return None if out is None else json.loads(out)
