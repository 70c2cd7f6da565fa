import json
import math
import random

import pytest
from scipy.special import betainc

from hetconv.benchmark import GoldAnswer
from hetconv.corpus import Literal
from hetconv.evaluation import (
    RunFormatError,
    ZeroVarianceError,
    answer_presence,
    evaluate_run,
    levenshtein,
    mcnemar,
    normalize_answer,
    p_at_1,
    paired_t_test,
)
from hetconv.retrieval import Evidence, RankedEvidence


def make_ranked(texts_mentions):
    out = []
    for rank, (text, mentions) in enumerate(texts_mentions, start=1):
        out.append(
            RankedEvidence(
                evidence=Evidence(
                    evidence_id=f"e{rank}", source="TEXT", text=text,
                    mentions=tuple(mentions), provenance=("t", rank),
                ),
                bm25=1.0 / rank,
                rank=rank,
            )
        )
    return out


# --- levenshtein -----------------------------------------------------------------

def test_levenshtein_examples():
    assert levenshtein("a", "a") == 0
    assert levenshtein("abc", "") == 3
    assert levenshtein("", "abc") == 3
    assert levenshtein("kitten", "sitting") == 3


def oracle_levenshtein(a, b):
    rows = len(a) + 1
    cols = len(b) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        table[i][0] = i
    for j in range(cols):
        table[0][j] = j
    for i in range(1, rows):
        for j in range(1, cols):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(
                table[i - 1][j] + 1, table[i][j - 1] + 1, table[i - 1][j - 1] + cost
            )
    return table[-1][-1]


def test_levenshtein_matches_full_matrix_oracle():
    rng = random.Random(13)
    alphabet = "abcdef"
    for _ in range(200):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        assert levenshtein(a, b) == oracle_levenshtein(a, b)


# --- answer normalization ------------------------------------------------------------

def test_normalize_exact_surface_match():
    result = normalize_answer("Tyrion", [("Tyrion", "Q103"), ("Other", "Q1")])
    assert result.kb_id == "Q103"
    assert result.method == "exact"


def test_normalize_literal_first_without_consulting_mentions():
    result = normalize_answer("11-06-1969", [("11-06-1969", "Q999")])
    assert result.method == "literal"
    assert result.kb_id == Literal("date", "1969-06-11", "11-06-1969")


def test_normalize_edit_distance_fallback():
    # distances frozen from the DP oracle: "Sansa Stark" is actually the
    # closer surface to "Ned Stark" (4 vs 5), so its id must win
    mentions = [("Eddard Stark", "QX"), ("Sansa Stark", "QY")]
    result = normalize_answer("Ned Stark", mentions)
    assert levenshtein("ned stark", "eddard stark") == 5
    assert levenshtein("ned stark", "sansa stark") == 4
    assert result.kb_id == "QY"
    assert result.method == "edit_distance"
    # a closer surface beats both
    result = normalize_answer("Eddard Starke", mentions)
    assert result.kb_id == "QX"
    assert result.matched_surface == "Eddard Stark"


def test_normalize_exact_wins_over_edit_distance():
    mentions = [("Neda Stark", "QZ"), ("Ned Stark", "QX")]
    result = normalize_answer("ned stark", mentions)
    assert result.method == "exact"
    assert result.kb_id == "QX"


def test_normalize_tie_breaks_by_frequency_then_id():
    mentions = [("Alpha", "Q2"), ("Alpha", "Q1"), ("Alpha", "Q1")]
    assert normalize_answer("Alpha", mentions).kb_id == "Q1"
    mentions = [("Alpha", "Q2"), ("Alpha", "Q1")]
    assert normalize_answer("Alpha", mentions).kb_id == "Q1"


def test_normalize_empty_mentions_is_none():
    result = normalize_answer("anything", [])
    assert result.method == "none"
    assert result.kb_id is None


# --- P@1 ------------------------------------------------------------------------------

def test_p_at_1_entity_match():
    normalized = normalize_answer("Tyrion", [("Tyrion", "Q103")])
    assert p_at_1(normalized, "Tyrion", [GoldAnswer("Tyrion Lannister", "Q103")]) == 1


def test_p_at_1_granularity_mismatch_is_zero():
    normalized = normalize_answer("2011", [])
    gold = GoldAnswer("April 17, 2011", Literal("date", "2011-04-17", "April 17, 2011"))
    assert normalized.kb_id == Literal("year", "2011", "2011")
    assert p_at_1(normalized, "2011", [gold]) == 0


def test_p_at_1_raw_label_fallback():
    normalized = normalize_answer("Fab Four", [])
    assert normalized.method == "none"
    assert p_at_1(normalized, "Fab Four", [GoldAnswer("Fab Four", None)]) == 1
    assert p_at_1(normalized, "Fab Four", [GoldAnswer("Fantastic Four", None)]) == 0


# --- answer presence ----------------------------------------------------------------

def test_answer_presence_boundary_and_truncation():
    golds = [GoldAnswer("needle", None)]
    # gold only in the rank-100 evidence: still counts at e=100
    entries = make_ranked([("hay", [])] * 99 + [("the needle is here", [])])
    assert len(entries) == 100 and entries[-1].rank == 100
    assert answer_presence(entries, golds) == 1
    assert answer_presence(entries[:10], golds) == 0
    assert answer_presence([], golds) == 0
    # gold first appearing at rank 40 vanishes when truncated to e=10
    entries = make_ranked(
        [("hay", [])] * 39 + [("the needle is here", [])] + [("hay", [])] * 60
    )
    assert answer_presence(entries, golds) == 1
    assert answer_presence(entries[:10], golds) == 0


def test_answer_presence_monotone_in_e():
    golds = [GoldAnswer("needle", None)]
    entries = make_ranked([("hay", [])] * 30 + [("needle", [])] + [("hay", [])] * 30)
    values = [answer_presence(entries[:e], golds) for e in (1, 5, 10, 50, 100)]
    assert values == sorted(values)


# --- evaluate_run -----------------------------------------------------------------------

def write_run(tmp_path, benchmark, correct_fraction=1.0):
    records = []
    total = sum(len(c.turns) for c in benchmark)
    budget = int(round(total * correct_fraction))
    for conv in benchmark:
        for turn in conv.turns:
            gold = turn.gold_answers[0]
            if budget > 0:
                raw = gold.label
                mentions = (
                    [{"surface": gold.label, "entity": gold.kb_id}]
                    if isinstance(gold.kb_id, str)
                    else []
                )
                budget -= 1
            else:
                raw = "definitely wrong"
                mentions = []
            records.append(
                {
                    "conv_id": conv.conv_id,
                    "turn": turn.index,
                    "prediction_raw": raw,
                    "top_evidence_ids": ["e1"],
                    "answer_presence_inputs": [
                        {
                            "id": "e1",
                            "rank": 1,
                            "score": 1.0,
                            "source": "TEXT",
                            "text": f"something about {gold.label}",
                            "mentions": mentions,
                            "provenance": ["t", 1],
                        }
                    ],
                }
            )
    path = tmp_path / "run.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n", "utf-8")
    return path


def test_evaluate_run_all_correct(tmp_path, benchmark):
    subset = benchmark[:2]
    report = evaluate_run(write_run(tmp_path, subset, 1.0), subset)
    assert report.p_at_1 == 1.0
    assert report.answer_presence == 1.0


def test_evaluate_run_half_correct(tmp_path, benchmark):
    subset = benchmark[:2]
    report = evaluate_run(write_run(tmp_path, subset, 0.5), subset)
    assert report.p_at_1 == 0.5


def test_evaluate_run_missing_question_is_error(tmp_path, benchmark):
    subset = benchmark[:2]
    path = write_run(tmp_path, subset[:1])
    with pytest.raises(RunFormatError, match=subset[1].conv_id):
        evaluate_run(path, subset)


def test_evaluate_run_micro_average_equals_record_mean(tmp_path, benchmark):
    subset = benchmark[:4]
    report = evaluate_run(write_run(tmp_path, subset, 0.7), subset)
    assert report.p_at_1 == sum(r.p_at_1 for r in report.records) / len(report.records)
    assert report.answer_presence == sum(
        r.answer_presence for r in report.records
    ) / len(report.records)


def test_evaluate_run_breakdowns_match_brute_force(tmp_path, benchmark):
    subset = benchmark[:6]
    report = evaluate_run(write_run(tmp_path, subset, 0.6), subset)
    lengths = {c.conv_id: len(c.turns) for c in subset}
    by_turn = {}
    for record in report.records:
        by_turn.setdefault(record.turn_bucket(lengths[record.conv_id]), []).append(
            record.p_at_1
        )
    for bucket, values in by_turn.items():
        assert report.by_turn[bucket] == pytest.approx(sum(values) / len(values))
    domains = {}
    for record in report.records:
        domains.setdefault(record.domain, []).append(record.p_at_1)
    for domain, values in domains.items():
        assert report.by_domain[domain] == pytest.approx(sum(values) / len(values))


def test_report_table_renders(tmp_path, benchmark):
    subset = benchmark[:2]
    report = evaluate_run(write_run(tmp_path, subset, 1.0), subset)
    table = report.format_table()
    assert "P@1" in table and "answer presence" in table


# --- significance tests --------------------------------------------------------------

def test_mcnemar_closed_form():
    a = [1] * 10 + [0] * 2 + [1] * 5 + [0] * 5
    b = [0] * 10 + [1] * 2 + [1] * 5 + [0] * 5
    statistic, p_value = mcnemar(a, b)
    assert statistic == pytest.approx(49 / 12, abs=1e-9)
    assert 0.0 <= p_value <= 1.0


def test_mcnemar_equal_disagreements():
    a = [1] * 5 + [0] * 5
    b = [0] * 5 + [1] * 5
    statistic, _ = mcnemar(a, b)
    assert statistic == pytest.approx(0.1, abs=1e-12)


def test_mcnemar_degenerate_zero():
    assert mcnemar([1, 0, 1], [1, 0, 1]) == (0.0, 1.0)


def test_mcnemar_mismatched_lengths():
    with pytest.raises(ValueError):
        mcnemar([1, 0], [1])


def test_paired_t_zero_variance_errors():
    with pytest.raises(ZeroVarianceError):
        paired_t_test([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    with pytest.raises(ZeroVarianceError):
        paired_t_test([1.1, 2.1, 3.1], [1.0, 2.0, 3.0])  # constant +0.1 differences


def test_paired_t_matches_formula_oracle():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(3, 40)
        a = [rng.uniform(0, 1) for _ in range(n)]
        b = [rng.uniform(0, 1) for _ in range(n)]
        diffs = [x - y for x, y in zip(a, b)]
        mean = sum(diffs) / n
        var = sum((d - mean) ** 2 for d in diffs) / (n - 1)
        if var == 0:
            continue
        expected_t = mean / math.sqrt(var / n)
        t, p = paired_t_test(a, b)
        assert t == pytest.approx(expected_t, abs=1e-9)
        # two-sided p via the regularized incomplete beta identity
        df = n - 1
        expected_p = betainc(df / 2.0, 0.5, df / (df + expected_t**2))
        assert p == pytest.approx(float(expected_p), abs=1e-9)
