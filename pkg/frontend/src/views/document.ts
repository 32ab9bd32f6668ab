// Shared document editor with optimistic versioning. A version conflict
// surfaces as a merge prompt showing the server's current body.

import type { SharedDocument } from "../api.js";
import { clear, el } from "../dom.js";

export interface DocumentHandlers {
  onSave: (baseVersion: number, body: string) => void;
  onAnnotate: (start: number, end: number, note: string) => void;
}

export function renderDocument(
  container: HTMLElement,
  doc: SharedDocument,
  handlers: DocumentHandlers,
): void {
  clear(container);
  const editor = el("textarea", { class: "doc-editor" }) as HTMLTextAreaElement;
  editor.value = doc.body;

  const annotationList = el("ul", { class: "annotation-list" });
  for (const annotation of doc.annotations) {
    annotationList.append(
      el(
        "li",
        {
          class: annotation.orphaned ? "annotation orphaned" : "annotation",
          "data-annotation-id": annotation.id,
        },
        `[${annotation.start}, ${annotation.end}) ${annotation.note}` +
          (annotation.orphaned ? " (orphaned)" : ""),
      ),
    );
  }

  container.append(
    el("h3", {}, `Shared document (version ${doc.version})`),
    editor,
    el(
      "div",
      { class: "doc-actions" },
      el(
        "button",
        {
          class: "doc-save",
          onclick: () => handlers.onSave(doc.version, editor.value),
        },
        "save",
      ),
      el(
        "button",
        {
          class: "doc-annotate",
          onclick: () => {
            const start = editor.selectionStart ?? 0;
            const end = editor.selectionEnd ?? start;
            const note = window.prompt("Annotation note:");
            if (note && note.trim()) handlers.onAnnotate(start, end, note);
          },
        },
        "annotate selection",
      ),
    ),
    el("section", { class: "annotations" }, el("h4", {}, "Annotations"), annotationList),
  );
}

export function renderDocumentConflict(
  container: HTMLElement,
  currentVersion: number,
  currentBody: string,
  attemptedBody: string,
  onRetry: (baseVersion: number, body: string) => void,
): void {
  const banner = el(
    "div",
    { class: "conflict-banner", role: "alert" },
    el(
      "p",
      {},
      `Someone saved version ${currentVersion} while you were editing. ` +
        "Merge their text with yours, then save again.",
    ),
    el("h4", {}, "Their version"),
    el("pre", { class: "conflict-theirs" }, currentBody),
    el("h4", {}, "Your edit"),
    el("pre", { class: "conflict-yours" }, attemptedBody),
    el(
      "button",
      {
        class: "conflict-retry",
        onclick: () => {
          const editor = container.querySelector<HTMLTextAreaElement>(".doc-editor");
          onRetry(currentVersion, editor ? editor.value : attemptedBody);
        },
      },
      "save merged text",
    ),
  );
  container.prepend(banner);
}
