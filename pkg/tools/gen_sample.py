#!/usr/bin/env python3
"""Regenerate the bundled test corpora (deterministic, fixed seeds).

Writes src/wirtwidth/data/codes.txt (named small diagrams: the torus
family plus filtered random codes) and src/wirtwidth/data/sample_large.tsv
(1000 random 12..16-crossing codes for the batch-pipeline tests).

Random codes are uniform chord diagrams with random over/under roles.
They are valid Gauss codes but generally not planar-realizable; all
computed quantities are diagram-level and do not depend on planarity.
Small random codes are filtered to need at least two seeds, so the
balance and profile invariants are exercised in their main regime.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wirtwidth import closure_strands, diagram_from_text, wirtinger_number  # noqa: E402
from wirtwidth.errors import WirtwidthError  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "wirtwidth" / "data"

SMALL_SEED = 20250811
LARGE_SEED = 16161616
LARGE_COUNT = 1000


def random_code(n: int, rng: random.Random) -> str:
    pos = list(range(2 * n))
    rng.shuffle(pos)
    entries = [0] * (2 * n)
    for label in range(1, n + 1):
        a, b = pos[2 * label - 2], pos[2 * label - 1]
        if rng.random() < 0.5:
            a, b = b, a
        entries[a] = label
        entries[b] = -label
    return ",".join(map(str, entries))


def torus2(k: int) -> str:
    """Closed 2-braid code of the (2,k) torus knot, k odd: -1,2,...,1,-2,..."""
    first = [(-1) ** (i + 1) * (i + 1) for i in range(k)]
    return ",".join(map(str, first + [-x for x in first]))


def valid(code: str):
    try:
        return diagram_from_text(code)
    except WirtwidthError:
        return None


def pick_random(n: int, rng: random.Random, want_mu: int | None = None) -> str:
    while True:
        code = random_code(n, rng)
        diagram = valid(code)
        if diagram is None:
            continue
        floods = any(
            len(closure_strands(diagram, [s])) == diagram.n_strands
            for s in range(diagram.n_strands)
        )
        if floods:
            continue
        if want_mu is not None:
            mu, _ = wirtinger_number(diagram, k_max=want_mu)
            if mu != want_mu:
                continue
        return code


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SMALL_SEED)

    rows: list[tuple[str, str]] = [
        ("trefoil", torus2(3)),
        ("figure8", "-1,2,-3,4,-2,1,-4,3"),
        ("torus_2_5", torus2(5)),
        ("torus_2_7", torus2(7)),
        ("torus_2_9", torus2(9)),
    ]
    for n in (5, 6, 7):
        for tag in "ab":
            rows.append((f"rnd{n}{tag}", pick_random(n, rng)))
    rows.append(("rnd6mu3", pick_random(6, rng, want_mu=3)))
    rows.append(("rnd7mu3", pick_random(7, rng, want_mu=3)))
    for n in (8, 9):
        rows.append((f"rnd{n}a", pick_random(n, rng)))
    rows.append(("rnd15mu4", pick_random(15, rng, want_mu=4)))
    rows.append(("unknot0", ""))

    header = (
        "# Bundled diagram corpus: name<TAB>gauss_code per line.\n"
        "# trefoil and torus_2_k are the standard closed 2-braid codes.\n"
        "# rnd* are seeded random chord-diagram codes (not necessarily\n"
        "# planar-realizable); all computed quantities are diagram-level.\n"
        "# Regenerate with tools/gen_sample.py.\n"
    )
    with open(DATA / "codes.txt", "w", encoding="utf-8") as fh:
        fh.write(header)
        for name, code in rows:
            fh.write(f"{name}\t{code}\n")

    rng = random.Random(LARGE_SEED)
    with open(DATA / "sample_large.tsv", "w", encoding="utf-8") as fh:
        fh.write("# 1000 random 12..16-crossing codes, seed 16161616\n")
        count = 0
        while count < LARGE_COUNT:
            n = rng.randint(12, 16)
            code = random_code(n, rng)
            if valid(code) is None:
                continue
            count += 1
            fh.write(f"r{n}_{count:04d}\t{code}\n")
    print(f"wrote {DATA / 'codes.txt'} and {DATA / 'sample_large.tsv'}")


if __name__ == "__main__":
    main()
