// Solution board: human section above AI section, in exactly the API's order.
// AI cards carry the disclaimer banner and the generative-AI label.

import type { SolutionEntry } from "../api.js";
import { clear, el } from "../dom.js";

export interface BoardHandlers {
  onVote: (solutionId: string) => void;
  onPropose: (body: string) => void;
  onRequestAi: () => void;
  onFinalize: (solutionId: string) => void;
}

function card(entry: SolutionEntry, handlers: BoardHandlers): HTMLElement {
  const node = el(
    "article",
    { class: `solution-card origin-${entry.origin}`, "data-solution-id": entry.id },
    entry.origin === "ai"
      ? el("div", { class: "ai-label" }, entry.origin_label ?? "generated using Generative AI")
      : null,
    entry.origin === "ai" && entry.disclaimer
      ? el("div", { class: "disclaimer-banner", role: "note" }, entry.disclaimer)
      : null,
    el("p", { class: "solution-body" }, entry.body),
    el(
      "div",
      { class: "solution-meta" },
      el("span", { class: "vote-count" }, `${entry.vote_count} votes`),
      entry.author_handle ? el("span", { class: "author" }, `by ${entry.author_handle}`) : null,
      el("button", { class: "vote-button", onclick: () => handlers.onVote(entry.id) }, "vote"),
      el(
        "button",
        { class: "finalize-button", onclick: () => handlers.onFinalize(entry.id) },
        "mark as final",
      ),
    ),
  );
  return node;
}

export function renderSolutionBoard(
  container: HTMLElement,
  solutions: SolutionEntry[],
  handlers: BoardHandlers,
): void {
  clear(container);

  const form = el(
    "form",
    {
      class: "propose-form",
      onsubmit: (event: Event) => {
        event.preventDefault();
        const input = container.querySelector<HTMLTextAreaElement>(".propose-input");
        if (input && input.value.trim()) {
          handlers.onPropose(input.value);
          input.value = "";
        }
      },
    },
    el("textarea", { class: "propose-input", placeholder: "Propose a solution..." }),
    el("button", { type: "submit" }, "propose"),
    el(
      "button",
      { type: "button", class: "request-ai", onclick: () => handlers.onRequestAi() },
      "suggest with AI",
    ),
  );
  container.append(form);

  if (solutions.length === 0) {
    container.append(
      el(
        "p",
        { class: "empty-state" },
        "No solutions yet. Propose the first one, or ask for AI suggestions below.",
      ),
    );
    return;
  }

  // Render in the exact order the API returned; only the section headers are added.
  const humanSection = el("section", { class: "board-section human-section" }, el("h3", {}, "Worker solutions"));
  const aiSection = el(
    "section",
    { class: "board-section ai-section" },
    el("h3", {}, "AI suggestions"),
  );
  let humanCount = 0;
  let aiCount = 0;
  for (const entry of solutions) {
    if (entry.origin === "human") {
      humanSection.append(card(entry, handlers));
      humanCount += 1;
    } else {
      aiSection.append(card(entry, handlers));
      aiCount += 1;
    }
  }
  if (humanCount > 0) container.append(humanSection);
  if (aiCount > 0) container.append(aiSection);
}
