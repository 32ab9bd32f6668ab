// Task timer controls: start/stop buttons posting to the timing endpoints.
// Button states: idle (start enabled), running (stop enabled), done (both off).

import { clear, el } from "../dom.js";

export type TimerPhase = "idle" | "running" | "done";

export interface TimerHandlers {
  onStart: (taskIndex: number) => void;
  onStop: (taskIndex: number) => void;
}

export function renderTimerControls(
  container: HTMLElement,
  taskIndex: number,
  phase: TimerPhase,
  durationSeconds: number | null,
  handlers: TimerHandlers,
): void {
  clear(container);
  const startAttrs: Record<string, string | ((e: Event) => void)> = {
    class: "timer-start",
    onclick: () => handlers.onStart(taskIndex),
  };
  const stopAttrs: Record<string, string | ((e: Event) => void)> = {
    class: "timer-stop",
    onclick: () => handlers.onStop(taskIndex),
  };
  if (phase !== "idle") startAttrs.disabled = "disabled";
  if (phase !== "running") stopAttrs.disabled = "disabled";

  container.append(
    el("span", { class: "timer-label" }, `Task ${taskIndex}`),
    el("button", startAttrs, "start task"),
    el("button", stopAttrs, "finish task"),
    el(
      "span",
      { class: "timer-status" },
      phase === "done" && durationSeconds != null
        ? `completed in ${durationSeconds.toFixed(0)}s`
        : phase === "running"
          ? "running..."
          : "not started",
    ),
  );
}
