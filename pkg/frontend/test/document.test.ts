// Shared document: rendering, annotations, and the conflict merge prompt.

import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderDocument, renderDocumentConflict } from "../src/views/document.js";
import { pane } from "./helpers.js";

const doc = {
  category_id: "cat-1",
  version: 3,
  body: "current plan text",
  annotations: [
    { id: "a1", author_handle: "w2", start: 0, end: 7, note: "intro", created_at: 1, orphaned: false },
    { id: "a2", author_handle: "w3", start: 40, end: 60, note: "stale", created_at: 2, orphaned: true },
  ],
};

describe("shared document", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("shows version, body, and annotations with orphan flags", () => {
    const container = pane();
    renderDocument(container, doc, { onSave: vi.fn(), onAnnotate: vi.fn() });
    expect(container.querySelector("h3")?.textContent).toBe("Shared document (version 3)");
    expect((container.querySelector(".doc-editor") as HTMLTextAreaElement).value).toBe(
      "current plan text",
    );
    const annotations = [...container.querySelectorAll(".annotation-list li")];
    expect(annotations).toHaveLength(2);
    expect(annotations[1].className).toContain("orphaned");
    expect(annotations[1].textContent).toContain("(orphaned)");
  });

  it("saving passes the base version it rendered with", () => {
    const onSave = vi.fn();
    const container = pane();
    renderDocument(container, doc, { onSave, onAnnotate: vi.fn() });
    const editor = container.querySelector(".doc-editor") as HTMLTextAreaElement;
    editor.value = "my edited text";
    (container.querySelector(".doc-save") as HTMLButtonElement).click();
    expect(onSave).toHaveBeenCalledWith(3, "my edited text");
  });

  it("conflict prompt shows both versions and retries with the server version", () => {
    const container = pane();
    renderDocument(container, doc, { onSave: vi.fn(), onAnnotate: vi.fn() });
    const onRetry = vi.fn();
    renderDocumentConflict(container, 4, "their newer text", "my attempted text", onRetry);

    const banner = container.querySelector(".conflict-banner") as HTMLElement;
    expect(banner.textContent).toContain("version 4");
    expect(banner.querySelector(".conflict-theirs")?.textContent).toBe("their newer text");
    expect(banner.querySelector(".conflict-yours")?.textContent).toBe("my attempted text");

    const editor = container.querySelector(".doc-editor") as HTMLTextAreaElement;
    editor.value = "merged text";
    (banner.querySelector(".conflict-retry") as HTMLButtonElement).click();
    expect(onRetry).toHaveBeenCalledWith(4, "merged text");
  });
});
