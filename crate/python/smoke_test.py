#!/usr/bin/env python3
"""Smoke test for the radsq Python bindings.

Build the extension and put it on the path first:

    cargo build --release -p radsq-py
    mkdir -p python/_build
    cp target/release/libradsq.so python/_build/radsq.so
    PYTHONPATH=python/_build python3 python/smoke_test.py
"""

import json
import sys

import radsq


def check(cond, msg):
    if not cond:
        print(f"FAIL: {msg}")
        sys.exit(1)
    print(f"ok: {msg}")


def main():
    # Construction and parsing agree.
    d32 = radsq.Quiver.delta(3, 2)
    parsed = radsq.Quiver.from_text("3\n0 1 0\n0 0 1\n2 0 0\n")
    check(d32 == parsed, "delta(3,2) equals its parsed text form")
    check(d32.n == 3 and d32.is_connected(), "basic structure")
    check(d32.adjacency() == [[0, 1, 0], [0, 0, 1], [2, 0, 0]], "adjacency readback")

    # Shape detection survives relabeling.
    shape = d32.detect_delta(); check(shape == (3, 2, 4, [0, 1, 2]), "delta detection")
    relabeled = radsq.Quiver([[0, 2], [1, 0]])
    check(relabeled.detect_delta() == (2, 2, 4, [1, 0]), "relabeled delta detection")
    check(radsq.Quiver([[1]]).is_self_injective(), "one-loop quiver is self-injective")
    check(not d32.is_self_injective(), "delta(3,2) is not self-injective")

    # Syzygy calculus and Ext profiles.
    check(d32.syzygy([0, 0, 1]) == [2, 0, 0], "syzygy of S(2)")
    profile = d32.ext_profile(0, 4)
    check(profile[1] == 0 and profile[2] == 0 and profile[3] > 0, "Ext profile of S(0)")
    check(d32.nakayama_bound(0) == 3, "vanishing bound attained at the start vertex")
    check(d32.arrow_value(2, 0) == (2, 2), "arrow value a*b = 4 on the bundle")

    # Full analysis report is JSON with the expected verdicts.
    report = json.loads(d32.analyze_json())
    check(report["self_injective"] is False, "report self-injectivity flag")
    check(report["oracle"]["diffs"] == [], "both engines agree")
    check(report["classification"]["witness"] is None, "no deep-vanishing witness")

    # Distinguished module on two loops: length 5, claim t^2+t-1 = 19 disagrees.
    d12 = radsq.Quiver.delta(1, 2)
    dm = json.loads(d12.distinguished_module_json(5))
    check(dm["length"] == 5, "distinguished module length over two loops")
    check(dm["length"] == dm["presentation_coker_dim"], "independent length route agrees")
    check(not dm["length_matches_claim"], "closed-form length claim disagrees as expected")
    check(all(dm["checks"].values()), "all distinguished-module checks pass")

    # Corpus sweep stays law-abiding.
    lines = radsq.enumerate_reports(2, 1)
    check(len(lines) == 12, "connected census for n=2, entries <= 1")
    for line in lines:
        r = json.loads(line)
        check(r["oracle"]["diffs"] == [], f"oracle agreement on {r['quiver']['adj']}")

    print("smoke test passed")


if __name__ == "__main__":
    main()
