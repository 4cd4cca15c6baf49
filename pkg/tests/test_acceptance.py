"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The heavy shared work (the exhaustive twin-free sweep for n <= 6) runs once
in a session fixture and is reused across criteria.
"""

import random

import pytest
from click.testing import CliRunner

from locdom.bound import (
    candidate_sets,
    construct_ld,
    decompose,
    derive_good_set,
    ld_size_limit,
    locating_size_limit,
    max_score_exact,
    score_sum,
    thinning_move,
)
from locdom.cli import main as cli_main
from locdom.graphs import (
    all_labeled_graphs,
    decode_graph6,
    encode_graph6,
    generate,
    is_twin_free,
    new_graph,
)
from locdom.location import is_locating, is_locating_dominating, x_partition
from locdom.solver import (
    min_locating,
    min_locating_dominating,
    s_k_of_graph,
    two_locating_partition,
)

MAX_N = 6


def _report(line):
    print(line)


@pytest.fixture(scope="session")
def exact_sweep():
    """Every twin-free labeled graph with n <= 6, with its constructive
    report, its decomposition, and the exact optima."""
    records = []
    for n in range(1, MAX_N + 1):
        for g in all_labeled_graphs(n):
            if not is_twin_free(g):
                continue
            report = construct_ld(g)
            s_value, good = max_score_exact(g)
            d = decompose(g, good, s_max=s_value)
            l_opt = min_locating(g)
            ld_opt = min_locating_dominating(g)
            records.append((g, report, d, l_opt.size, ld_opt.size))
    return records


def test_criterion_1_theorem_at_desk_scale(exact_sweep):
    violations = 0
    for g, report, _, _, _ in exact_sweep:
        ok = (
            report.certified
            and is_locating(g, report.witness)
            and report.witness_size <= locating_size_limit(g.n)
            and is_locating_dominating(g, report.ld_witness)
            and report.ld_witness_size <= ld_size_limit(g.n)
        )
        if not ok:
            violations += 1
    _report(
        f"ACCEPTANCE 1 ({'PASS' if not violations else 'FAIL'}): "
        f"{len(exact_sweep)} twin-free graphs n<=6, {violations} bound violations"
    )
    assert violations == 0


def test_criterion_2_oracle_sandwich(exact_sweep):
    violations = 0
    for g, report, _, l_exact, ld_exact in exact_sweep:
        if not (
            l_exact <= report.witness_size
            and ld_exact <= report.ld_witness_size
            and ld_exact <= l_exact + 1
        ):
            violations += 1
    _report(
        f"ACCEPTANCE 2 ({'PASS' if not violations else 'FAIL'}): "
        f"oracle sandwich on {len(exact_sweep)} graphs, {violations} violations"
    )
    assert violations == 0


def test_criterion_3_thinning_never_decreases():
    rng = random.Random(20240517)
    pool = []
    seed = 0
    while len(pool) < 400:
        seed += 1
        n = rng.randint(3, 12)
        pool.append(generate("gnp", n, rng.choice([0.2, 0.35, 0.5, 0.7]), seed))
    trials = 0
    violations = 0
    while trials < 10_000:
        g = rng.choice(pool)
        a = rng.getrandbits(g.n)
        part = x_partition(g, a, g.complement_set(a))
        fat = [c for c in part.classes if c.bit_count() >= 2]
        if not fat:
            continue
        cls = rng.choice(fat)
        u = rng.choice([v for v in range(g.n) if cls >> v & 1])
        before = score_sum(g, a)
        after = score_sum(g, thinning_move(g, a, cls, u))
        if after.s_a < before.s_a or after.s_comp < before.s_comp:
            violations += 1
        trials += 1
    _report(
        f"ACCEPTANCE 3 ({'PASS' if not violations else 'FAIL'}): "
        f"{trials} thinning trials, {violations} score decreases"
    )
    assert violations == 0


def test_criterion_4_maximizers_normalize_to_good_sets():
    graphs = []
    for n in range(1, 6):
        graphs.extend(all_labeled_graphs(n))
    seed = 0
    for n in range(6, 11):
        for _ in range(30):
            seed += 1
            graphs.append(generate("gnp", n, 0.4, seed))
    assert len(graphs) >= 1000
    checked = 0
    violations = 0
    for g in graphs:
        s_value = max(score_sum(g, a).sum for a in range(1 << g.n))
        for a in range(1 << g.n):
            if score_sum(g, a).sum != s_value:
                continue
            r = derive_good_set(g, a, s_max=s_value)
            scored = score_sum(g, r)
            if scored.sum != s_value or scored.s_comp != r.bit_count():
                violations += 1
            checked += 1
    _report(
        f"ACCEPTANCE 4 ({'PASS' if not violations else 'FAIL'}): "
        f"{len(graphs)} graphs, {checked} maximizers normalized, {violations} bad"
    )
    assert violations == 0


def test_criterion_5_candidate_soundness(exact_sweep):
    violations = 0
    k_positive = 0
    for g, _, d, _, _ in exact_sweep:
        n, b, c, k = g.n, d.b.bit_count(), d.c.bit_count(), d.k
        cands = {cand.tag: cand for cand in candidate_sets(g, d, strict=True)}
        ok = (
            all(cand.locating for cand in cands.values())
            and cands["eq1"].size == n - c - k
            and cands["eq2"].size == b + c
            and cands["eq3"].size == n - b
            and d.a_prime.bit_count() <= k
        )
        if k >= 1:
            k_positive += 1
            ok = ok and cands["eq4"].size <= c + 3 * k - 1
        if not ok:
            violations += 1
    _report(
        f"ACCEPTANCE 5 ({'PASS' if not violations else 'FAIL'}): "
        f"{len(exact_sweep)} decompositions ({k_positive} with k>=1), {violations} unsound"
    )
    assert violations == 0


def test_criterion_6_question_tools(exact_sweep):
    q1_missing = []
    sk_violations = 0
    min_sn = {}
    attained = {}
    for g, _, _, _, _ in exact_sweep:
        if not two_locating_partition(g).found:
            q1_missing.append(encode_graph6(g))
        n = g.n
        for k in range(1, n + 1):
            value = s_k_of_graph(g, k).value
            if value > (k - 1) * n:
                sk_violations += 1
            if k == n:
                if n >= 2 and value < 2 * n - 1:
                    sk_violations += 1
                if value < min_sn.get(n, 10**9):
                    min_sn[n] = value
                attained.setdefault(n, False)
                if value == 2 * n - 1:
                    attained[n] = True
    if q1_missing:
        _report(f"NOTE: twin-free graphs with NO two-locating-set partition: {q1_missing}")
    _report(f"NOTE: min s_n over twin-free graphs per n: {min_sn} (2n-1 attained: {attained})")
    _report(
        f"ACCEPTANCE 6 ({'PASS' if not sk_violations else 'FAIL'}): "
        f"q1 completed on {len(exact_sweep)} graphs ({len(q1_missing)} found=false); "
        f"{sk_violations} s_k inequality violations"
    )
    assert sk_violations == 0
    # the 2n-1 minimum is attained where a twin-free graph with an isolated
    # or universal vertex exists; confirmed for n = 5, 6 (n = 4 attains 8)
    assert attained[5] and attained[6]


def test_criterion_7_codec_roundtrip():
    count = 0
    for n in range(MAX_N + 1):
        for g in all_labeled_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g
            count += 1
    rng = random.Random(99)
    for i in range(1000):
        n = rng.randint(1, 50)
        g = generate("gnp", n, rng.choice([0.1, 0.3, 0.5]), 7000 + i)
        assert decode_graph6(encode_graph6(g)) == g
        count += 1
    p4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert encode_graph6(p4) == "Ch"  # frozen from an independent reference encoder
    assert decode_graph6("Ch") == p4
    _report(f"ACCEPTANCE 7 (PASS): {count} graphs round-tripped bit-exactly")


def test_criterion_8_corpus_determinism(tmp_path):
    runner = CliRunner()
    out1 = tmp_path / "jobs1.jsonl"
    out8 = tmp_path / "jobs8.jsonl"
    r1 = runner.invoke(cli_main, ["corpus", "all:5", "--jobs", "1", "--out", str(out1)])
    r8 = runner.invoke(cli_main, ["corpus", "all:5", "--jobs", "8", "--out", str(out8)])
    assert r1.exit_code == 0 and r8.exit_code == 0
    identical = out1.read_bytes() == out8.read_bytes()
    _report(
        f"ACCEPTANCE 8 ({'PASS' if identical else 'FAIL'}): "
        f"--jobs 1 vs --jobs 8 corpus outputs byte-identical: {identical}"
    )
    assert identical
