"""Zoom views and problem upvoting."""

from __future__ import annotations

import pytest

from conftest import category_id_by_name
from worklens import demo
from worklens.errors import NotFoundError, RequestError


class TestZoomOut:
    def test_empty_store(self, service):
        view = service.zoom_out()
        assert view["bars"] == []
        assert view["total_categorized"] == 0
        assert view["total_unassigned"] == 0

    def test_no_run_yet_counts_whole_corpus_unassigned(self, service):
        for i in range(4):
            service.add_manual_issue("w", f"issue {i}")
        view = service.zoom_out()
        assert view["bars"] == []
        assert view["total_unassigned"] == 4

    def test_bar_counts_and_totals(self, categorized_service):
        view = categorized_service.zoom_out()
        counts = {bar["name"]: bar["complaint_count"] for bar in view["bars"]}
        assert counts == {
            "Platform Policy": 3,
            "Payment": 3,
            "Scam": 3,
            "Usability": 3,
            "Poor Customer Support": 3,
        }
        assert view["total_categorized"] == 15
        assert view["total_unassigned"] == 0

    def test_sorted_by_count_then_name(self, categorized_service):
        view = categorized_service.zoom_out()
        names = [bar["name"] for bar in view["bars"]]
        # all counts tie at 3, so names break the tie ascending
        assert names == sorted(names)

    def test_descriptions_derive_from_summaries(self, categorized_service):
        view = categorized_service.zoom_out()
        by_name = {bar["name"]: bar for bar in view["bars"]}
        description = by_name["Platform Policy"]["description"]
        assert demo.CATEGORY_SUMMARIES["Platform Policy"].startswith(description)
        assert description.endswith(".")


class TestZoomIn:
    def test_all_posts_on_one_page(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Scam")
        view = categorized_service.zoom_in(cid, page=1, page_size=10)
        assert len(view["posts"]) == 3
        assert view["total_posts"] == 3

    def test_pagination_splits_ten_ten_five(self, make_service):
        svc = make_service()
        for i in range(25):
            svc.add_manual_issue("w", f"recurring fee complaint {i}")
        svc.run_pipeline(wait=True)
        cid = category_id_by_name(svc, "Payment")
        sizes = [len(svc.zoom_in(cid, page=p, page_size=10)["posts"]) for p in (1, 2, 3)]
        assert sizes == [10, 10, 5]

    def test_pagination_is_stable_and_exhaustive(self, make_service):
        svc = make_service()
        for i in range(23):
            svc.add_manual_issue("w", f"crash report {i}")
        svc.run_pipeline(wait=True)
        cid = category_id_by_name(svc, "Usability")
        seen: list[str] = []
        page = 1
        while True:
            posts = svc.zoom_in(cid, page=page, page_size=7)["posts"]
            if not posts:
                break
            seen.extend(p["id"] for p in posts)
            page += 1
        assert len(seen) == len(set(seen)) == 23
        created = [
            (-(svc._state.complaints[pid].created_at), pid) for pid in seen
        ]
        assert created == sorted(created)

    def test_summary_matches_committed_fixture_text(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Platform Policy")
        view = categorized_service.zoom_in(cid, page=1, page_size=10)
        assert view["summary"] == demo.CATEGORY_SUMMARIES["Platform Policy"]

    def test_unknown_category_not_found(self, categorized_service):
        with pytest.raises(NotFoundError):
            categorized_service.zoom_in("nope", 1, 10)

    def test_invalid_page_rejected(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Scam")
        with pytest.raises(RequestError):
            categorized_service.zoom_in(cid, page=0, page_size=10)


class TestUpvotes:
    def test_first_vote_counts(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Payment")
        assert categorized_service.upvote_problem(cid, "w1") == 1

    def test_repeat_vote_is_noop(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Payment")
        categorized_service.upvote_problem(cid, "w1")
        assert categorized_service.upvote_problem(cid, "w1") == 1

    def test_distinct_voters_accumulate(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Payment")
        for i in range(12):
            categorized_service.upvote_problem(cid, f"w{i}")
        assert categorized_service.upvote_problem(cid, "w0") == 12

    def test_unknown_category(self, categorized_service):
        with pytest.raises(NotFoundError):
            categorized_service.upvote_problem("missing", "w1")

    def test_empty_voter_handle(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Payment")
        with pytest.raises(RequestError):
            categorized_service.upvote_problem(cid, "  ")

    def test_votes_survive_a_second_run(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Scam")
        categorized_service.upvote_problem(cid, "w1")
        categorized_service.run_pipeline(wait=True)
        assert category_id_by_name(categorized_service, "Scam") == cid
        view = categorized_service.zoom_in(cid, 1, 10)
        assert view["upvote_count"] == 1


class TestViewPurity:
    def test_views_mutate_nothing(self, categorized_service):
        cid = category_id_by_name(categorized_service, "Scam")
        before = categorized_service.state_hash()
        categorized_service.zoom_out()
        categorized_service.zoom_in(cid, 1, 5)
        categorized_service.list_unassigned()
        categorized_service.list_sources()
        assert categorized_service.state_hash() == before


class TestUnassignedListing:
    def test_unassigned_reachable_but_not_in_bars(self, make_service):
        svc = make_service()
        svc.add_manual_issue("w", "fee gripe")
        svc.add_manual_issue("w", "completely unrelated musing")
        svc.run_pipeline(wait=True)
        view = svc.zoom_out()
        assert view["total_unassigned"] == 1
        assert all(bar["name"] != "Unassigned" for bar in view["bars"])
        unassigned = svc.list_unassigned()
        assert [p["body"] for p in unassigned] == ["completely unrelated musing"]
