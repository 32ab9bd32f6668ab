// Zoom-in view: summary panel, scrollable post list, pagination, upvote control.

import type { ZoomInView } from "../api.js";
import { clear, el } from "../dom.js";

export interface DetailHandlers {
  onBack: () => void;
  onUpvote: () => void;
  onPage: (page: number) => void;
}

export function renderZoomIn(
  container: HTMLElement,
  view: ZoomInView,
  handlers: DetailHandlers,
): void {
  clear(container);
  container.append(
    el(
      "div",
      { class: "detail-header" },
      el("button", { class: "back-button", onclick: () => handlers.onBack() }, "back to overview"),
      el("h2", {}, view.name),
      el(
        "button",
        { class: "upvote-button", onclick: () => handlers.onUpvote() },
        `upvote (${view.upvote_count})`,
      ),
    ),
    el(
      "section",
      { class: "summary-panel" },
      el("h3", {}, "Summary"),
      el("p", { class: "summary-text" }, view.summary ?? "Not summarized yet."),
    ),
  );

  const list = el("ul", { class: "post-list" });
  for (const post of view.posts) {
    list.append(
      el(
        "li",
        { class: "post", "data-post-id": post.id },
        el("div", { class: "post-meta" }, `${post.source_kind} · ${post.source_name}`),
        el("div", { class: "post-body" }, post.body),
      ),
    );
  }
  const lastPage = Math.max(1, Math.ceil(view.total_posts / view.page_size));
  container.append(
    el("section", { class: "posts-panel" }, el("h3", {}, `Posts (${view.total_posts})`), list),
    el(
      "div",
      { class: "pager" },
      el(
        "button",
        {
          class: "pager-prev",
          onclick: () => handlers.onPage(view.page - 1),
          ...(view.page <= 1 ? { disabled: "disabled" } : {}),
        },
        "previous",
      ),
      el("span", { class: "pager-status" }, `page ${view.page} of ${lastPage}`),
      el(
        "button",
        {
          class: "pager-next",
          onclick: () => handlers.onPage(view.page + 1),
          ...(view.page >= lastPage ? { disabled: "disabled" } : {}),
        },
        "next",
      ),
    ),
  );
}
