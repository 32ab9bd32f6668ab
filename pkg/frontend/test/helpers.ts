// Builders for stubbed API payloads used across the DOM tests.

import type { SolutionEntry, ZoomOutView } from "../src/api.js";

export const DISCLAIMER = "AI-generated suggestion — may contain errors; review before acting.";

export function solution(partial: Partial<SolutionEntry> & { id: string }): SolutionEntry {
  const origin = partial.origin ?? "human";
  return {
    category_id: "cat-1",
    body: `solution ${partial.id}`,
    origin,
    author_handle: origin === "human" ? "w1" : null,
    run_id: origin === "ai" ? "run-1" : null,
    vote_count: 0,
    disclaimer_required: origin === "ai",
    created_at: 1000,
    ...(origin === "ai" ? { disclaimer: DISCLAIMER, origin_label: "generated using Generative AI" } : {}),
    ...partial,
  };
}

export function mixedBoard(): SolutionEntry[] {
  // Order as the API would return it: humans first, then AI, votes already applied.
  return [
    solution({ id: "h1", origin: "human", vote_count: 2 }),
    solution({ id: "h2", origin: "human", vote_count: 2, created_at: 2000 }),
    solution({ id: "h3", origin: "human", vote_count: 0 }),
    solution({ id: "a1", origin: "ai", vote_count: 9 }),
    solution({ id: "a2", origin: "ai", vote_count: 4 }),
  ];
}

export function fiveCategoryZoomOut(): ZoomOutView {
  const names: Array<[string, number, number]> = [
    ["Payment", 41, 7],
    ["Scam", 23, 4],
    ["Usability", 17, 2],
    ["Poor Customer Support", 11, 1],
    ["Platform Policy", 5, 0],
  ];
  return {
    bars: names.map(([name, complaints, upvotes], index) => ({
      category_id: `cat-${index}`,
      name,
      complaint_count: complaints,
      upvote_count: upvotes,
      description: `${name} description`,
    })),
    total_categorized: names.reduce((sum, [, c]) => sum + c, 0),
    total_unassigned: 3,
  };
}

export function pane(): HTMLElement {
  const node = document.createElement("div");
  document.body.append(node);
  return node;
}
