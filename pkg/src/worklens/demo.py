"""Demo complaint corpus with recorded provider responses for offline runs.

The recorded responses were captured from a categorize/summarize/solutions
run over this exact corpus; `recorded_demo_pairs` re-renders the prompts
through the production templates so replay matches byte-for-byte. Run
`python -m worklens.demo <dir>` to write the dump and fixture files.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .ingestion import normalize_body
from .pipeline.prompts import DEFAULT_TEMPLATES, PromptKind, render_prompt

SUBREDDIT_SOURCE = "r/freelance_work"
REVIEW_SOURCE = "appstore:GigMarket"


def demo_subreddit_records() -> list[dict]:
    return [
        {
            "external_id": "t3_pp01",
            "author": "w_marta",
            "body": "The platform doubled the price of connects overnight, so just sending proposals now eats half of what a small job pays.",
            "created_at": "2024-02-01T09:15:00Z",
        },
        {
            "external_id": "t3_pp02",
            "author": "w_deniz",
            "body": "Commission tiers changed again with zero notice. The policy now takes 20% from new freelancers who can least afford it.",
            "created_at": "2024-02-02T18:40:00Z",
        },
        {
            "external_id": "t3_pp03",
            "author": "w_julia",
            "body": "There is no transparency about who viewed my proposal unless I pay for yet another add-on. The analytics are locked away.",
            "created_at": "2024-02-03T11:05:00Z",
        },
        {
            "external_id": "t3_pay01",
            "author": "w_amit",
            "body": "Client approved the milestone, then the payment has been pending a security review for three weeks. I still have not been paid.",
            "created_at": "2024-02-04T08:30:00Z",
        },
        {
            "external_id": "t3_pay02",
            "author": "w_rosa",
            "body": "The withdrawal fee plus the currency conversion spread took almost 8% of my earnings this month.",
            "created_at": "2024-02-05T20:12:00Z",
        },
        {
            "external_id": "t3_scam01",
            "author": "w_ken",
            "body": "A client asked me to complete a full sample project for free and disappeared right after I delivered it. Total scam.",
            "created_at": "2024-02-06T14:22:00Z",
        },
        {
            "external_id": "t3_scam02",
            "author": "w_lena",
            "body": "Got invited to a job that asked me to pay a refundable deposit to unlock the contract. Obvious fraud, reported it and nothing happened.",
            "created_at": "2024-02-07T10:48:00Z",
        },
        {
            "external_id": "t3_usab01",
            "author": "w_pavel",
            "body": "The new proposal editor crashes every time I paste a portfolio link, and I lose the whole draft.",
            "created_at": "2024-02-08T16:02:00Z",
        },
    ]


def demo_review_records() -> list[dict]:
    return [
        {
            "external_id": "rev-9001",
            "author": "gig_dora",
            "rating": 1,
            "body": "Payment took 45 days to arrive and every inquiry was blamed on the bank. I only got my money after filing a dispute.",
            "created_at": "2024-02-09T07:55:00Z",
        },
        {
            "external_id": "rev-9002",
            "author": "gig_sam",
            "rating": 1,
            "body": "Full of fake job postings that are just phishing for personal documents. I reported dozens and they stay up.",
            "created_at": "2024-02-10T12:34:00Z",
        },
        {
            "external_id": "rev-9003",
            "author": "gig_ines",
            "rating": 2,
            "body": "The app logs me out constantly and the login loop never ends on Android 14.",
            "created_at": "2024-02-11T21:19:00Z",
        },
        {
            "external_id": "rev-9004",
            "author": "gig_theo",
            "rating": 2,
            "body": "Notifications arrive hours late, so by the time I see an invite the job is gone. Unusable for quick gigs.",
            "created_at": "2024-02-12T06:27:00Z",
        },
        {
            "external_id": "rev-9005",
            "author": "gig_mina",
            "rating": 1,
            "body": "Support tickets sit for weeks and every reply is a copy-paste template that ignores the actual question.",
            "created_at": "2024-02-13T15:44:00Z",
        },
        {
            "external_id": "rev-9006",
            "author": "gig_omar",
            "rating": 2,
            "body": "My account was restricted by mistake and it took a month of chasing customer support to get a human to look at it.",
            "created_at": "2024-02-14T09:08:00Z",
        },
        {
            "external_id": "rev-9007",
            "author": "gig_ana",
            "rating": 3,
            "body": "Chat support just links the same help article over and over. There is no way to escalate a real problem.",
            "created_at": "2024-02-15T18:51:00Z",
        },
    ]


def demo_bodies() -> list[str]:
    """Complaint bodies in ingest order: subreddit dump first, then reviews."""
    records = demo_subreddit_records() + demo_review_records()
    return [normalize_body(record["body"]) for record in records]


# Corpus indices per category, in the order the recorded response lists them.
CATEGORY_MAPPING: dict[str, list[int]] = {
    "Platform Policy": [0, 1, 2],
    "Payment": [3, 4, 8],
    "Scam": [5, 6, 9],
    "Usability": [7, 10, 11],
    "Poor Customer Support": [12, 13, 14],
}

CATEGORY_SUMMARIES: dict[str, str] = {
    "Platform Policy": (
        "The common theme among the listed 'Platform Policy' problems faced by gig workers is "
        "dissatisfaction with the platform's fees and policies. Gig workers are unhappy with the "
        "high fees, especially for newbies who cannot afford them, and the arbitrary increases in "
        "fees for more experienced freelancers. There are complaints about the cost of connects, "
        "commission charges, and withdrawal policies. Additionally, some gig workers are unhappy "
        "with the platform's lack of transparency regarding proposal views and analytics. Overall, "
        "these problems suggest that the platform prioritizes profits over the well-being of freelancers."
    ),
    "Payment": (
        "The common thread in the 'Payment' complaints is money that workers have already earned "
        "failing to reach them promptly or in full. Approved milestones sit in week-long security "
        "reviews, payouts take up to 45 days and are only released after formal disputes, and "
        "withdrawal fees combined with currency conversion quietly remove a meaningful share of "
        "earnings. The problem is less about winning work than about being able to rely on getting paid for it."
    ),
    "Scam": (
        "The 'Scam' complaints describe fraudulent clients and postings that exploit workers "
        "before any contract exists: requests for free sample projects that are never paid for, "
        "demands for refundable deposits to unlock contracts, and fake postings that phish for "
        "personal documents. Workers report these schemes but say the postings remain up, leaving "
        "newcomers in particular exposed to losing work, money, and identity data."
    ),
    "Usability": (
        "The 'Usability' complaints center on the platform's software getting in the way of the "
        "work itself: the proposal editor crashes and destroys drafts, the mobile app traps users "
        "in login loops, and notifications arrive hours late so time-sensitive invitations expire "
        "unseen. For workers whose income depends on responding quickly, these defects translate "
        "directly into lost jobs."
    ),
    "Poor Customer Support": (
        "The 'Poor Customer Support' complaints describe a support channel that does not resolve "
        "problems: tickets sit unanswered for weeks, replies are templated and ignore the question, "
        "mistaken account restrictions take a month of chasing to undo, and chat agents loop the "
        "same help article with no escalation path. Workers feel there is no human accountable for "
        "fixing anything."
    ),
}

CATEGORY_SOLUTIONS: dict[str, list[str]] = {
    "Platform Policy": [
        "Negotiate platform fees: Gig workers can come together and negotiate with the platform "
        "for lower fees or a fairer fee structure. They can explain their challenges and how high "
        "fees affect their ability to earn a living. With a collective voice, they may be able to "
        "persuade the platform to revise its policies.",
        "Seek alternative platforms: Gig workers can explore other platforms that charge lower "
        "fees or offer more benefits. They can research and compare platforms to find the one that "
        "best suits their needs. Switching platforms may help gig workers find better-paying jobs "
        "and reduce the impact of high fees.",
        "Advocate for fair policies: Gig workers can form advocacy groups or join existing ones to "
        "lobby for fairer policies for all gig workers. They can work with policymakers to push "
        "for regulations that protect gig workers' rights and ensure a level playing field.",
        "Share knowledge and resources: Gig workers can collaborate and share knowledge and "
        "resources to improve their chances of finding better-paying jobs. They can form "
        "communities and support groups where they share tips, advice, and best practices for "
        "finding and landing jobs. By sharing their experiences, gig workers can help each other "
        "overcome common challenges.",
        "Encourage transparency - Gig platforms should encourage clients to be transparent in "
        "their job postings, payment processes, and communication with gig workers. Clients should "
        "disclose all the necessary details related to the job upfront, and payment processes "
        "should be clear and easy to understand. This will help gig workers to identify any red "
        "flags and avoid working with fraudulent clients.",
    ],
    "Payment": [
        "Communication is key: agree on scope, milestones, and payment terms in writing before any "
        "work starts, so there is a concrete record to point to the moment a client or the "
        "platform stalls a payment.",
        "Use funded milestone escrow for every contract: break projects into smaller milestones "
        "that are funded up front, so unpaid work never accumulates beyond one stage.",
        "Track and publish payout timelines together: workers can pool data on how long "
        "withdrawals actually take per method and use it to push the platform to honor its stated "
        "schedule.",
        "Escalate stalled payments through formal dispute channels early instead of waiting on "
        "reassurances; documented disputes are what eventually release held funds.",
        "Keep a second withdrawal method configured and tested, so a single provider outage or "
        "review queue cannot freeze all earnings at once.",
    ],
    "Scam": [
        "Create a scam alert system where workers flag suspicious postings and clients, so "
        "warnings are visible to everyone before they apply or deliver any work.",
        "Verify clients before starting: check payment verification, hiring history, and past "
        "reviews, and treat any request for a deposit as disqualifying.",
        "Never deliver full free samples: share watermarked or partial work until a funded "
        "contract is in place.",
        "Document and report every scam attempt with screenshots through official channels, so "
        "repeat offenders become visible patterns rather than isolated reports.",
        "Press the platform for stronger client screening: identity verification for posters and "
        "faster takedowns of reported fraudulent postings.",
    ],
    "Usability": [
        "Pool crash and bug reports in one shared record with device details and steps to "
        "reproduce, so the platform receives one well-evidenced report instead of scattered "
        "complaints.",
        "Draft proposals outside the editor and paste the final text in, so an editor crash never "
        "destroys the only copy.",
        "Enable every available notification channel (email, SMS, push) and test them, reducing "
        "the chance a time-sensitive invite is missed because one channel lags.",
        "Share device and app-version combinations that work reliably, giving workers a known-good "
        "setup while fixes are pending.",
        "Request a status page and public bug tracker from the platform, so workers can see "
        "whether a failure is known and when a fix ships.",
    ],
    "Poor Customer Support": [
        "Collect unresolved ticket numbers and response times in a shared log, then present the "
        "aggregate to the platform as evidence that support is failing at scale.",
        "Write and share template escalation scripts that cite the platform's own published "
        "service terms, making each individual escalation harder to dismiss.",
        "Maintain a community answer base for the most common problems, so workers stop depending "
        "on the canned replies for known issues.",
        "Use public channels thoughtfully: a factual public post about an ignored ticket often "
        "gets a human response faster than another private follow-up.",
        "Demand a published escalation path with named response-time commitments, and track "
        "whether the platform meets them.",
    ],
}


def recorded_demo_pairs() -> list[tuple[str, str]]:
    """Render the demo prompts through the production templates, paired with responses."""
    bodies = demo_bodies()
    pairs: list[tuple[str, str]] = []
    categorize_prompt = render_prompt(DEFAULT_TEMPLATES[PromptKind.CATEGORIZE], bodies)
    pairs.append((categorize_prompt, json.dumps(CATEGORY_MAPPING)))
    for name, indices in CATEGORY_MAPPING.items():
        member_bodies = [bodies[i] for i in indices]
        summarize_prompt = render_prompt(
            DEFAULT_TEMPLATES[PromptKind.SUMMARIZE], member_bodies, name
        )
        pairs.append((summarize_prompt, CATEGORY_SUMMARIES[name]))
        solutions_prompt = render_prompt(
            DEFAULT_TEMPLATES[PromptKind.SOLUTIONS], member_bodies, name
        )
        numbered = "\n".join(f"{i}. {text}" for i, text in enumerate(CATEGORY_SOLUTIONS[name], start=1))
        pairs.append((solutions_prompt, numbered))
    return pairs


def write_fixture_files(directory: str | Path) -> list[Path]:
    """Write the demo dumps and the recorded-response fixture into `directory`."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    posts_path = directory / "demo_subreddit_posts.jsonl"
    with open(posts_path, "w", encoding="utf-8") as handle:
        for record in demo_subreddit_records():
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
    written.append(posts_path)

    reviews_path = directory / "demo_app_reviews.jsonl"
    with open(reviews_path, "w", encoding="utf-8") as handle:
        for record in demo_review_records():
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
    written.append(reviews_path)

    responses_path = directory / "demo_responses.json"
    with open(responses_path, "w", encoding="utf-8") as handle:
        json.dump(
            {"pairs": [{"prompt": p, "response": r} for p, r in recorded_demo_pairs()]},
            handle,
            ensure_ascii=False,
            indent=2,
        )
        handle.write("\n")
    written.append(responses_path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    for path in write_fixture_files(target):
        print(path)
