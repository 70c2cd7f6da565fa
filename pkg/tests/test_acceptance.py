"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines on the terminal.
"""

import json
import math
import random
import time
from contextlib import contextmanager

import pytest

from hetconv.answering import prepare_training_set
from hetconv.evaluation import (
    answer_presence,
    evaluate_run,
    levenshtein,
    mcnemar,
    normalize_answer,
    p_at_1,
    paired_t_test,
)
from hetconv.pipeline import PipelineConfig, run_benchmark, write_run_file
from hetconv.qu import (
    ConversationHistory,
    HistoryTurn,
    QuVariant,
    StructuredRepresentation,
    build_cfg,
)
from hetconv.retrieval import (
    Evidence,
    Retriever,
    RetrieverConfig,
    bm25_score,
    build_bm25_stats,
    sentence_evidences,
    top_e,
    verbalize_fact,
    verbalize_infobox_entry,
    verbalize_table_row,
)
from hetconv.supervision import is_answering, label_conversation
from hetconv.textnorm import normalize_surface, tokenize

# Pinned from the initial oracle run over the fixtures: heuristic-mode P@1 was
# 0.87; the gate leaves headroom only for benign tie-break changes.
HEURISTIC_P1_THRESHOLD = 0.85
# Pinned ablation value: with the question-entity slot blanked, no anchors
# survive on the fixture and answer presence hits the floor exactly.
ABLATED_ANSWER_PRESENCE = 0.0


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"[criterion {number:>2}] FAIL  {description}")
        raise
    print(f"[criterion {number:>2}] PASS  {description}")


@pytest.fixture(scope="module")
def gold_run(corpus, benchmark):
    started = time.perf_counter()
    results = run_benchmark(
        corpus, benchmark, PipelineConfig(qu=QuVariant.GOLD_SR, history_mode="gold")
    )
    return results, time.perf_counter() - started


@pytest.fixture(scope="module")
def heuristic_run(corpus, benchmark):
    started = time.perf_counter()
    results = run_benchmark(
        corpus, benchmark, PipelineConfig(qu=QuVariant.HEURISTIC_SR, history_mode="gold")
    )
    return results, time.perf_counter() - started


@pytest.fixture(scope="module")
def gold_index(benchmark):
    return {(c.conv_id, t.index): t for c in benchmark for t in c.turns}


def question_scores(results, gold_index):
    rows = []
    for result in results:
        turn = gold_index[(result.conv_id, result.turn)]
        mentions = [m for e in result.ranked for m in e.evidence.mentions]
        normalized = normalize_answer(result.prediction.raw, mentions)
        rows.append(
            {
                "key": (result.conv_id, result.turn),
                "p1": p_at_1(normalized, result.prediction.raw, turn.gold_answers),
                "presence": answer_presence(result.ranked, turn.gold_answers),
                "ranked": result.ranked,
                "golds": turn.gold_answers,
            }
        )
    return rows


def test_criterion_1_verbalization_fidelity(corpus):
    with criterion(1, "verbalization reproduces the four printed evidence strings"):
        started = time.perf_counter()
        fact = next(f for f in corpus.facts_for_entity("Q101") if f.fact_id == "f-got-1")
        kb_text = verbalize_fact(fact, corpus).text
        page = corpus.pages["p-got"]
        text_text = sentence_evidences(page, corpus)[1].text
        table_text = verbalize_table_row(page, 0, 0, corpus).text
        info_text = verbalize_infobox_entry(page, "Running time", corpus).text
        elapsed = time.perf_counter() - started
        assert kb_text == (
            "Game of Thrones, cast member, Nikolaj Coster-Waldau, "
            "character role, Jaime Lannister"
        )
        assert text_text == (
            "Game of Thrones, The third and youngest Lannister sibling is the "
            "dwarf Tyrion (Peter Dinklage)."
        )
        assert table_text == (
            "Game of Thrones, Season is Season 1, First aired is April 17, 2011"
        )
        assert info_text == "Game of Thrones, Running time, 50–82 minutes"
        assert elapsed < 1.0


def oracle_bm25(query, all_token_lists, index, k1, b):
    n_docs = len(all_token_lists)
    avgdl = sum(len(tokens) for tokens in all_token_lists) / n_docs
    doc = all_token_lists[index]
    score = 0.0
    for term in query:
        tf = doc.count(term)
        if tf == 0:
            continue
        df = sum(1 for tokens in all_token_lists if term in tokens)
        idf = math.log((n_docs - df + 0.5) / (df + 0.5) + 1.0)
        score += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * len(doc) / avgdl))
    return score


def test_criterion_2_bm25_oracle_equivalence():
    with criterion(2, "BM25 matches the brute-force formula on 100 random corpora"):
        rng = random.Random(2024)
        vocabulary = [f"term{i}" for i in range(10)]
        for _ in range(100):
            n_docs = rng.randint(1, 20)
            docs = []
            for d in range(n_docs):
                words = [rng.choice(vocabulary) for _ in range(rng.randint(1, 12))]
                docs.append(
                    Evidence(
                        evidence_id=f"d{d:02d}", source="TEXT", text=" ".join(words),
                        mentions=(), provenance=("t", d),
                    )
                )
            token_lists = [tokenize(d.text) for d in docs]
            query = [rng.choice(vocabulary) for _ in range(rng.randint(1, 6))]
            k1 = rng.choice([0.9, 1.2, 1.5, 2.0])
            b = rng.choice([0.0, 0.5, 0.75, 1.0])
            stats = build_bm25_stats(docs)
            package_scores = {}
            oracle_scores = {}
            for index, doc in enumerate(docs):
                package_scores[doc.evidence_id] = bm25_score(query, doc, stats, k1, b)
                oracle_scores[doc.evidence_id] = oracle_bm25(
                    query, token_lists, index, k1, b
                )
                assert package_scores[doc.evidence_id] == pytest.approx(
                    oracle_scores[doc.evidence_id], abs=1e-9
                )
            package_rank = sorted(
                package_scores, key=lambda i: (-round(package_scores[i], 9), i)
            )
            oracle_rank = sorted(
                oracle_scores, key=lambda i: (-round(oracle_scores[i], 9), i)
            )
            assert package_rank == oracle_rank


def oracle_levenshtein(a, b):
    table = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a) + 1):
        table[i][0] = i
    for j in range(len(b) + 1):
        table[0][j] = j
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(
                table[i - 1][j] + 1, table[i][j - 1] + 1, table[i - 1][j - 1] + cost
            )
    return table[-1][-1]


def test_criterion_3_levenshtein_metric_axioms():
    with criterion(3, "Levenshtein satisfies the metric axioms and the DP oracle"):
        assert levenshtein("kitten", "sitting") == 3
        rng = random.Random(99)
        alphabet = "abcdef"

        def random_string():
            return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))

        for _ in range(1000):
            a, b, c = random_string(), random_string(), random_string()
            d_ab = levenshtein(a, b)
            assert d_ab == oracle_levenshtein(a, b)
            assert d_ab >= 0
            assert (d_ab == 0) == (a == b)
            assert d_ab == levenshtein(b, a)
            assert d_ab <= levenshtein(a, c) + levenshtein(c, b)


def test_criterion_4_sr_round_trip():
    with criterion(4, "frame serialization round-trips; paper frames parse"):
        rng = random.Random(4)
        alphabet = "abcdefghijklmnopqrstuvwxyz0123456789 "

        def slot_text():
            while True:
                text = "".join(
                    rng.choice(alphabet) for _ in range(rng.randint(1, 16))
                ).strip()
                if text and text != "_" and " and " not in text:
                    return text

        for _ in range(1000):
            sr = StructuredRepresentation(
                context_entities=tuple(slot_text() for _ in range(rng.randint(0, 3))),
                question_entities=tuple(slot_text() for _ in range(rng.randint(0, 3))),
                predicate=slot_text() if rng.random() > 0.2 else "",
                answer_type=slot_text() if rng.random() > 0.5 else "",
            )
            assert StructuredRepresentation.parse(sr.serialized()) == sr

        sr = StructuredRepresentation.parse("GoT | the dwarf | who played | human")
        assert sr.context_entities == ("GoT",)
        assert sr.question_entities == ("the dwarf",)
        assert sr.predicate == "who played"
        assert sr.answer_type == "human"
        sr = StructuredRepresentation.parse("GoT | first season | release date | date")
        assert sr.question_entities == ("first season",)
        assert sr.answer_type == "date"


def test_criterion_5_cfg_soundness(corpus):
    with criterion(5, "flow-graph edges always point backwards; no match => self-sufficient"):
        rng = random.Random(5)
        shared = [f"word{i}" for i in range(30)]
        novel = [f"novel{i}" for i in range(30)]

        def random_turn():
            words = [rng.choice(shared) for _ in range(rng.randint(2, 6))]
            answers = tuple(
                " ".join(rng.choice(shared) for _ in range(rng.randint(1, 3)))
                for _ in range(rng.randint(0, 2))
            )
            return HistoryTurn(" ".join(words), answers)

        for case in range(500):
            history = ConversationHistory(
                tuple(random_turn() for _ in range(rng.randint(0, 5)))
            )
            force_no_match = case % 5 == 0
            pool = novel if force_no_match else shared + novel
            sr = StructuredRepresentation(
                question_entities=tuple(
                    rng.choice(pool) for _ in range(rng.randint(0, 2))
                ),
                predicate=" ".join(rng.choice(pool) for _ in range(rng.randint(0, 4))),
                answer_type=rng.choice(pool) if rng.random() > 0.5 else "",
            )
            question = " ".join(rng.choice(novel) for _ in range(3))
            cfg = build_cfg(sr, history, question, corpus.stopwords)
            by_id = {n.node_id: n for n in cfg.nodes}
            current_turn = len(history.turns)
            for edge in cfg.edges:
                assert by_id[edge.source].turn == current_turn
                assert by_id[edge.target].turn < current_turn
            assert cfg.self_sufficient == (len(cfg.edges) == 0)
            if force_no_match:
                assert cfg.self_sufficient


def test_criterion_6_distant_supervision_recovery(
    corpus, planted_conversations, planted_expectations
):
    with criterion(6, "labeler recovers the planted mention in the right slot, 10/10"):
        retriever = Retriever(corpus)
        conversations = {c.conv_id: c for c in planted_conversations}
        recovered = 0
        for expectation in planted_expectations:
            conversation = conversations[expectation["conv_id"]]
            labeled = label_conversation(conversation, corpus, retriever)
            planted_key = normalize_surface(expectation["planted"])
            placed = True
            for labeled_turn, slot in zip(labeled, expectation["slots"]):
                for mention in labeled_turn.relevant_mentions:
                    assert mention.evidence_count >= 1
                if slot is None:
                    continue
                slot_mentions = (
                    labeled_turn.gold_sr.question_entities
                    if slot == "question"
                    else labeled_turn.gold_sr.context_entities
                )
                if planted_key not in {normalize_surface(m) for m in slot_mentions}:
                    placed = False
            recovered += placed
        assert recovered == 10


def test_criterion_7_end_to_end_fixture_run(
    gold_run, heuristic_run, gold_index
):
    with criterion(7, "gold-frame run has full answer presence; heuristic P@1 over threshold"):
        gold_results, gold_elapsed = gold_run
        heuristic_results, heuristic_elapsed = heuristic_run
        assert len(gold_results) == 100
        gold_rows = question_scores(gold_results, gold_index)
        presence = sum(r["presence"] for r in gold_rows) / len(gold_rows)
        assert presence == 1.0
        heuristic_rows = question_scores(heuristic_results, gold_index)
        p1 = sum(r["p1"] for r in heuristic_rows) / len(heuristic_rows)
        assert p1 >= HEURISTIC_P1_THRESHOLD
        assert gold_elapsed + heuristic_elapsed < 60.0


def test_criterion_8_metric_laws(
    corpus, benchmark, gold_run, heuristic_run, gold_index, tmp_path
):
    with criterion(8, "P@1 <= answer presence; presence monotone in e; exact micro-average"):
        for results, _elapsed in (gold_run, heuristic_run):
            rows = question_scores(results, gold_index)
            for row in rows:
                assert row["p1"] <= row["presence"]
            previous = 0.0
            for e in (1, 5, 10, 50, 100):
                presence_at_e = sum(
                    answer_presence(row["ranked"][:e], row["golds"]) for row in rows
                ) / len(rows)
                assert presence_at_e >= previous - 1e-12
                previous = presence_at_e
        run_path = tmp_path / "heuristic.jsonl"
        write_run_file(run_path, heuristic_run[0])
        report = evaluate_run(run_path, benchmark)
        assert report.p_at_1 == sum(r.p_at_1 for r in report.records) / len(report.records)
        assert report.answer_presence == sum(
            r.answer_presence for r in report.records
        ) / len(report.records)


def test_criterion_9_significance_tests():
    with criterion(9, "McNemar closed form and paired-t formula oracle"):
        a = [1] * 10 + [0] * 2 + [1] * 3
        b = [0] * 10 + [1] * 2 + [1] * 3
        statistic, p_value = mcnemar(a, b)
        assert abs(statistic - 49 / 12) < 1e-6
        assert 0 < p_value < 1
        rng = random.Random(9)
        for _ in range(50):
            n = rng.randint(3, 60)
            xs = [rng.gauss(0, 1) for _ in range(n)]
            ys = [rng.gauss(0.2, 1) for _ in range(n)]
            diffs = [x - y for x, y in zip(xs, ys)]
            mean = sum(diffs) / n
            variance = sum((d - mean) ** 2 for d in diffs) / (n - 1)
            if variance == 0:
                continue
            expected_t = mean / math.sqrt(variance / n)
            t, _p = paired_t_test(xs, ys)
            assert t == pytest.approx(expected_t, abs=1e-9)


def test_criterion_10_training_filter(heuristic_run, gold_index):
    with criterion(10, "training-set filter agrees with an independent answering recount"):
        results, _ = heuristic_run
        runs = [
            (
                r.sr,
                r.ranked,
                list(gold_index[(r.conv_id, r.turn)].gold_answers),
            )
            for r in results
        ]
        instances = prepare_training_set(runs)
        kept_keys = {instance.sr_text for instance in instances}
        recount_keys = set()
        for sr, ranked, golds in runs:
            if any(is_answering(entry.evidence, golds) for entry in ranked):
                recount_keys.add(sr.serialized())
        assert kept_keys == recount_keys
        assert len(instances) == sum(
            1
            for sr, ranked, golds in runs
            if any(is_answering(entry.evidence, golds) for entry in ranked)
        )


def test_criterion_11_ablation_plumbing(corpus, benchmark, gold_run, gold_index):
    with criterion(11, "blanking the question-entity slot drops presence to the floor"):
        _, _elapsed = gold_run
        baseline_rows = question_scores(gold_run[0], gold_index)
        baseline = sum(r["presence"] for r in baseline_rows) / len(baseline_rows)
        ablated_results = run_benchmark(
            corpus,
            benchmark,
            PipelineConfig(
                qu=QuVariant.GOLD_SR,
                history_mode="gold",
                ablate=frozenset({"question_entity"}),
            ),
        )
        ablated_rows = question_scores(ablated_results, gold_index)
        ablated = sum(r["presence"] for r in ablated_rows) / len(ablated_rows)
        assert ablated < baseline  # direction per the slot-ablation finding
        assert ablated == ABLATED_ANSWER_PRESENCE
        assert baseline == 1.0
