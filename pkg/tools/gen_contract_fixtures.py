#!/usr/bin/env python3
"""Freeze engine behavior into JSON fixtures for the frontend contract tests.

The browser extension re-implements matching, ranking, and wrapping; these
fixtures pin both implementations to identical outputs. Regenerate after
changing the matcher, the search ranking, or the seed dictionary:

    python tools/gen_contract_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from termtip.annotate import annotate
from termtip.glossary import GlossaryStore
from termtip.markup import parse_html
from termtip.matcher import ResolvedTerm, find_matches

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

MATCHING_CASES = [
    ("The CPU is fast", ["CPU"]),
    ("SCPUs and cpu", ["CPU"]),
    ("", ["CPU"]),
    ("over TCP/IP links", ["TCP/IP", "IP"]),
    ("A+A+A+A", ["A+A"]),
    ("Three CPUs hum along", ["CPU"]),
    ("var CPU_COUNT = 4", ["CPU"]),
    ("CPU, GPU; (SSD) [API] end", ["CPU", "GPU", "SSD", "API"]),
    ("I like C++ a lot", ["C++"]),
    ("the cpu and the Cpu and the CPU", ["CPU"]),
    ("naïve café GPU élan", ["GPU"]),
    ("word GPU word", ["GPU"]),
    ("AB ABC ABCD", ["AB", "ABC", "ABCD"]),
    ("xAPIx API xAPI APIx", ["API"]),
    ("RAM at start and RAM at end RAM", ["RAM"]),
    ("mixed DNS dns DnS tokens", ["DNS"]),
    ("A-B A_B A.B", ["A-B", "A_B", "A.B"]),
    ("keys with spaces: USB C here", ["USB C"]),
    ("The GPU and the NPU and the TPU", ["GPU", "NPU", "TPU"]),
    ("punctuated (CPU). [GPU]! {SSD}?", ["CPU", "GPU", "SSD"]),
]

SEARCH_QUERIES = [
    ("", 10), ("CP", 10), ("cp", 5), ("A", 10), ("US", 10), ("net", 10),
    ("protocol", 10), ("memory", 10), ("P", 25), ("ss", 10), ("zzz", 10),
    ("graphics", 10), ("DD", 10), ("u", 15), ("storage", 10), ("wire", 10),
    ("CPU", 3), ("api", 10), ("D", 8), ("security", 10),
]

SMOKE_PAGE = """<!DOCTYPE html>
<html>
<head><title>Fixture page</title></head>
<body>
<h1>A short note on the CPU</h1>
<p>The CPU schedules work while the GPU draws frames; both sit on the same board.</p>
<p>Links are skipped: <a href="/cpu">CPU guide</a> stays untouched.</p>
<pre>CPU inside a code block is also skipped</pre>
<p>Storage lives on an SSD, and the CPU reads it over a fast bus.</p>
<p>Attribute values never change: <img src="x.png" title="CPU diagram" alt="board"></p>
</body>
</html>
"""


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    matching = []
    for text, keys in MATCHING_CASES:
        spans = find_matches(text, keys)
        matching.append({
            "text": text,
            "keys": keys,
            "spans": [{"key": s.key, "start": s.start, "end": s.end,
                       "surface": s.surface} for s in spans],
        })
    (OUT / "matching_contract.json").write_text(
        json.dumps(matching, ensure_ascii=False, indent=2) + "\n", "utf-8")

    store = GlossaryStore.seeded()
    entries = [e.to_json() for e in store.search("", limit=10_000)]
    queries = []
    for q, limit in SEARCH_QUERIES:
        results = store.search(q, limit)
        queries.append({"q": q, "limit": limit,
                        "expected_keys": [e.key for e in results]})
    (OUT / "search_contract.json").write_text(
        json.dumps({"entries": entries, "queries": queries},
                   ensure_ascii=False, indent=2) + "\n", "utf-8")

    seed_terms = {e.key: e for e in store.search("", limit=10_000)}
    page_keys = [s.key for s in find_matches(
        parse_html(SMOKE_PAGE).text(), list(seed_terms))]
    terms = [ResolvedTerm(k, seed_terms[k].expansion, seed_terms[k].definition,
                          "dictionary") for k in dict.fromkeys(page_keys)]
    annotated = annotate(parse_html(SMOKE_PAGE), terms)
    (OUT / "annotate_contract.json").write_text(json.dumps({
        "html": SMOKE_PAGE,
        "terms": [{"key": t.key, "expansion": t.expansion,
                   "definition": t.definition} for t in terms],
        "expected_counts": {key: count for key, count in annotated.annotations},
        "expected_total": annotated.total_wrapped,
    }, ensure_ascii=False, indent=2) + "\n", "utf-8")

    print(f"wrote {OUT / 'matching_contract.json'}")
    print(f"wrote {OUT / 'search_contract.json'} "
          f"({len(entries)} entries, {len(queries)} queries)")
    print(f"wrote {OUT / 'annotate_contract.json'} "
          f"(expected_total={annotated.total_wrapped})")


if __name__ == "__main__":
    main()
