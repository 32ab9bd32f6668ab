// Acceptance (UI ordering fidelity): rendered DOM order equals the API order
// and every AI card displays the disclaimer banner.

import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderSolutionBoard } from "../src/views/board.js";
import { DISCLAIMER, mixedBoard, pane, solution } from "./helpers.js";

const handlers = {
  onVote: vi.fn(),
  onPropose: vi.fn(),
  onRequestAi: vi.fn(),
  onFinalize: vi.fn(),
};

describe("solution board", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
    vi.clearAllMocks();
  });

  it("renders cards in exactly the API order", () => {
    const board = mixedBoard();
    const container = pane();
    renderSolutionBoard(container, board, handlers);
    const rendered = [...container.querySelectorAll(".solution-card")].map(
      (card) => card.getAttribute("data-solution-id"),
    );
    expect(rendered).toEqual(board.map((entry) => entry.id));
  });

  it("shows the disclaimer banner on every AI card and no human card", () => {
    const container = pane();
    renderSolutionBoard(container, mixedBoard(), handlers);
    for (const card of container.querySelectorAll(".solution-card.origin-ai")) {
      const banner = card.querySelector(".disclaimer-banner");
      expect(banner?.textContent).toBe(DISCLAIMER);
      expect(card.querySelector(".ai-label")?.textContent).toBe("generated using Generative AI");
    }
    for (const card of container.querySelectorAll(".solution-card.origin-human")) {
      expect(card.querySelector(".disclaimer-banner")).toBeNull();
      expect(card.querySelector(".ai-label")).toBeNull();
    }
  });

  it("places the human section above the AI section", () => {
    const container = pane();
    renderSolutionBoard(container, mixedBoard(), handlers);
    const sections = [...container.querySelectorAll(".board-section")];
    expect(sections.map((s) => s.className)).toEqual([
      "board-section human-section",
      "board-section ai-section",
    ]);
    const human = container.innerHTML.indexOf("human-section");
    const ai = container.innerHTML.indexOf("ai-section");
    expect(human).toBeGreaterThanOrEqual(0);
    expect(human).toBeLessThan(ai);
  });

  it("shows a propose placeholder on an empty board", () => {
    const container = pane();
    renderSolutionBoard(container, [], handlers);
    expect(container.querySelector(".empty-state")?.textContent).toMatch(/propose/i);
    expect(container.querySelectorAll(".solution-card")).toHaveLength(0);
  });

  it("wires vote and finalize buttons to the right solution ids", () => {
    const container = pane();
    renderSolutionBoard(container, [solution({ id: "h9" })], handlers);
    (container.querySelector(".vote-button") as HTMLButtonElement).click();
    expect(handlers.onVote).toHaveBeenCalledWith("h9");
    (container.querySelector(".finalize-button") as HTMLButtonElement).click();
    expect(handlers.onFinalize).toHaveBeenCalledWith("h9");
  });

  it("submits proposals through the form and clears the input", () => {
    const container = pane();
    renderSolutionBoard(container, [], handlers);
    const input = container.querySelector(".propose-input") as HTMLTextAreaElement;
    input.value = "we write a joint letter";
    (container.querySelector(".propose-form") as HTMLFormElement).dispatchEvent(
      new Event("submit", { cancelable: true }),
    );
    expect(handlers.onPropose).toHaveBeenCalledWith("we write a joint letter");
    expect(input.value).toBe("");
  });
});
