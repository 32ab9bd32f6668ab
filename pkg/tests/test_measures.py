"""Task timing and SUS scoring."""

from __future__ import annotations

import random

import pytest

from worklens.errors import ConflictError, RequestError
from worklens.measures import (
    read_answers_csv,
    score_answer_rows,
    sus_adjectival,
    sus_composite,
)


def oracle_composite(answers: list[int]) -> float:
    """Independent recomputation of the standard composite, item by item."""
    odd = sum(answers[i] - 1 for i in range(0, 10, 2))
    even = sum(5 - answers[i] for i in range(1, 10, 2))
    return 2.5 * (odd + even)


class TestComposite:
    def test_maximal_answers_score_100(self):
        answers = [5, 1, 5, 1, 5, 1, 5, 1, 5, 1]
        assert oracle_composite(answers) == 100
        assert sus_composite(answers) == 100

    def test_all_threes_score_50(self):
        answers = [3] * 10
        assert oracle_composite(answers) == 50
        assert sus_composite(answers) == 50

    def test_all_ones(self):
        # Odd items contribute 0, even items contribute 4 each: 2.5 * 20 = 50.
        answers = [1] * 10
        assert oracle_composite(answers) == 50
        assert sus_composite(answers) == oracle_composite(answers)

    def test_minimal_score_is_zero(self):
        answers = [1, 5, 1, 5, 1, 5, 1, 5, 1, 5]
        assert sus_composite(answers) == 0

    def test_matches_oracle_on_random_answers(self):
        rng = random.Random(3)
        for _ in range(300):
            answers = [rng.randint(1, 5) for _ in range(10)]
            assert sus_composite(answers) == oracle_composite(answers)

    def test_monotone_in_odd_items_antitone_in_even(self):
        rng = random.Random(4)
        for _ in range(100):
            answers = [rng.randint(1, 5) for _ in range(10)]
            base = sus_composite(answers)
            for i in range(10):
                if answers[i] == 5:
                    continue
                bumped = list(answers)
                bumped[i] += 1
                delta = sus_composite(bumped) - base
                if i % 2 == 0:  # odd item (1-based)
                    assert delta >= 0
                else:
                    assert delta <= 0

    @pytest.mark.parametrize("bad", [[3] * 9, [3] * 11, [0] + [3] * 9, [6] + [3] * 9, [3.0] * 10])
    def test_invalid_answers_rejected(self, bad):
        with pytest.raises(RequestError):
            sus_composite(bad)


class TestAdjectival:
    @pytest.mark.parametrize(
        "score,rating",
        [
            (86, "Excellent"),
            (14, "Poor"),
            (68, "Okay"),
            (80.3, "Good"),
            (80.4, "Excellent"),
            (68.1, "Good"),
            (67.9, "Awful"),
            (51, "Awful"),
            (50.9, "Poor"),
            (0, "Poor"),
            (100, "Excellent"),
        ],
    )
    def test_band_boundaries(self, score, rating):
        assert sus_adjectival(score) == rating

    def test_total_over_range_with_exactly_five_labels(self):
        seen = {sus_adjectival(s / 10) for s in range(0, 1001)}
        assert seen == {"Excellent", "Good", "Okay", "Awful", "Poor"}

    def test_out_of_range_rejected(self):
        for bad in (-0.1, 100.1):
            with pytest.raises(RequestError):
                sus_adjectival(bad)


class TestCsvScoring:
    def test_fixture_rows(self, tmp_path):
        from conftest import FIXTURES_DIR

        rows = read_answers_csv(FIXTURES_DIR / "sus_answers.csv")
        results = score_answer_rows(rows)
        assert [r["score"] for r in results] == [100.0, 50.0, 82.5, 17.5]
        assert [r["rating"] for r in results] == ["Excellent", "Poor", "Excellent", "Poor"]

    def test_bad_row_rejected(self, tmp_path):
        path = tmp_path / "answers.csv"
        path.write_text("1,2,3,4,5,1,2,3,4,banana\n")
        with pytest.raises(RequestError):
            read_answers_csv(path)


class TestTaskTiming:
    def test_start_stop_duration(self, service, monkeypatch):
        times = iter([1_000_000, 1_170_000])
        monkeypatch.setattr("worklens.service.now_ms", lambda: next(times))
        service.start_task("s1", 1)
        timing = service.stop_task("s1", 1)
        assert timing["duration_seconds"] == 170.0

    def test_stop_without_start(self, service):
        with pytest.raises(ConflictError):
            service.stop_task("s1", 2)

    def test_double_start(self, service):
        service.start_task("s1", 3)
        with pytest.raises(ConflictError):
            service.start_task("s1", 3)

    def test_double_stop(self, service):
        service.start_task("s1", 4)
        service.stop_task("s1", 4)
        with pytest.raises(ConflictError):
            service.stop_task("s1", 4)

    def test_task_index_domain(self, service):
        for bad in (0, 7, -1):
            with pytest.raises(RequestError):
                service.start_task("s1", bad)

    def test_durations_nonnegative_and_additive(self, service):
        for task in (1, 2, 3):
            service.start_task("s2", task)
            service.stop_task("s2", task)
        timings = [service._state.timings[f"s2:{i}"] for i in (1, 2, 3)]
        durations = [t.duration_seconds for t in timings]
        assert all(d >= 0 for d in durations)
        total = (timings[-1].stopped_at - timings[0].started_at) / 1000.0
        assert sum(durations) <= total + 1e-9


class TestSusRecording:
    def test_record_returns_score_and_rating(self, service):
        result = service.record_sus("s1", [3] * 10)
        assert result == {"session_id": "s1", "score": 50.0, "rating": "Poor"}

    def test_invalid_answers_store_nothing(self, service):
        before = service.state_hash()
        with pytest.raises(RequestError):
            service.record_sus("s1", [9] * 10)
        assert service.state_hash() == before
