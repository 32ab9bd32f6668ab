// Sensemaking chat: message list plus a post box; refreshed by polling.

import type { ChatMessage } from "../api.js";
import { clear, el } from "../dom.js";

export function renderChat(
  container: HTMLElement,
  messages: ChatMessage[],
  onPost: (body: string) => void,
): void {
  clear(container);
  const list = el("ul", { class: "chat-list" });
  for (const message of messages) {
    list.append(
      el(
        "li",
        { class: "chat-message", "data-message-id": message.id },
        el("span", { class: "chat-author" }, message.author_handle),
        el("span", { class: "chat-body" }, message.body),
      ),
    );
  }
  container.append(
    el("h3", {}, "Chat"),
    list,
    el(
      "form",
      {
        class: "chat-form",
        onsubmit: (event: Event) => {
          event.preventDefault();
          const input = container.querySelector<HTMLInputElement>(".chat-input");
          if (input && input.value.trim()) {
            onPost(input.value);
            input.value = "";
          }
        },
      },
      el("input", { class: "chat-input", placeholder: "Write a message..." }),
      el("button", { type: "submit" }, "send"),
    ),
  );
}
