// Zoom-out view: an interactive bar chart with hover tooltips.
// Bar widths, tooltip counts, and totals all come straight from the payload.

import type { ZoomOutView } from "../api.js";
import { clear, el } from "../dom.js";

export interface ChartHandlers {
  onSelect: (categoryId: string) => void;
}

export function renderZoomOut(
  container: HTMLElement,
  view: ZoomOutView,
  handlers: ChartHandlers,
): void {
  clear(container);
  container.append(
    el(
      "div",
      { class: "chart-totals" },
      `${view.total_categorized} categorized / ${view.total_unassigned} unassigned`,
    ),
  );

  if (view.bars.length === 0) {
    container.append(
      el("p", { class: "empty-state" }, "No problem categories yet. Run the pipeline first."),
    );
    return;
  }

  const maxCount = Math.max(...view.bars.map((bar) => bar.complaint_count), 1);
  const chart = el("div", { class: "bar-chart", role: "list" });
  for (const bar of view.bars) {
    const tooltip = el(
      "span",
      { class: "tooltip", role: "tooltip", hidden: "hidden" },
      `${bar.complaint_count} complaints, ${bar.upvote_count} upvotes`,
    );
    const fill = el("div", { class: "bar-fill" });
    fill.style.width = `${(bar.complaint_count / maxCount) * 100}%`;
    const row = el(
      "div",
      {
        class: "bar-row",
        role: "listitem",
        "data-category-id": bar.category_id,
        "data-count": String(bar.complaint_count),
        title: bar.description,
        onclick: () => handlers.onSelect(bar.category_id),
        onmouseenter: () => tooltip.removeAttribute("hidden"),
        onmouseleave: () => tooltip.setAttribute("hidden", "hidden"),
      },
      el("span", { class: "bar-label" }, bar.name),
      fill,
      el("span", { class: "bar-count" }, String(bar.complaint_count)),
      tooltip,
    );
    chart.append(row);
  }
  container.append(chart);
}
