// Acceptance (hover counts): tooltip values equal the zoom-out payload counts.

import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderZoomOut } from "../src/views/chart.js";
import { fiveCategoryZoomOut, pane } from "./helpers.js";

describe("zoom-out chart", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("renders one bar per category", () => {
    const container = pane();
    const view = fiveCategoryZoomOut();
    view.bars = view.bars.slice(0, 2);
    view.total_categorized = view.bars.reduce((sum, bar) => sum + bar.complaint_count, 0);
    renderZoomOut(container, view, { onSelect: vi.fn() });
    expect(container.querySelectorAll(".bar-row")).toHaveLength(2);
  });

  it("tooltip counts equal the payload counts for a 5-category stub", () => {
    const container = pane();
    const view = fiveCategoryZoomOut();
    renderZoomOut(container, view, { onSelect: vi.fn() });
    const rows = [...container.querySelectorAll(".bar-row")];
    expect(rows).toHaveLength(5);
    for (const [index, row] of rows.entries()) {
      const bar = view.bars[index];
      const tooltip = row.querySelector(".tooltip") as HTMLElement;
      expect(tooltip.hasAttribute("hidden")).toBe(true);
      row.dispatchEvent(new Event("mouseenter"));
      expect(tooltip.hasAttribute("hidden")).toBe(false);
      expect(tooltip.textContent).toBe(
        `${bar.complaint_count} complaints, ${bar.upvote_count} upvotes`,
      );
      expect(row.getAttribute("data-count")).toBe(String(bar.complaint_count));
      row.dispatchEvent(new Event("mouseleave"));
      expect(tooltip.hasAttribute("hidden")).toBe(true);
    }
  });

  it("shows the empty-state message when there are no bars", () => {
    const container = pane();
    renderZoomOut(
      container,
      { bars: [], total_categorized: 0, total_unassigned: 12 },
      { onSelect: vi.fn() },
    );
    expect(container.querySelector(".empty-state")).not.toBeNull();
    expect(container.querySelectorAll(".bar-row")).toHaveLength(0);
  });

  it("clicking a bar selects its category id", () => {
    const container = pane();
    const onSelect = vi.fn();
    renderZoomOut(container, fiveCategoryZoomOut(), { onSelect });
    (container.querySelector(".bar-row") as HTMLElement).click();
    expect(onSelect).toHaveBeenCalledWith("cat-0");
  });

  it("displays totals straight from the payload", () => {
    const container = pane();
    renderZoomOut(container, fiveCategoryZoomOut(), { onSelect: vi.fn() });
    expect(container.querySelector(".chart-totals")?.textContent).toBe(
      "97 categorized / 3 unassigned",
    );
  });
});
