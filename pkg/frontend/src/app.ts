// Single-page app composition: fetch, render, poll. All domain data comes
// from the API; the app only keeps view state (mode, category, page, session).

import { ApiError, type Api, type SharedDocument, type TaskTiming } from "./api.js";
import { clear, el } from "./dom.js";
import { assertValid, goToPage, initialState, zoomIn, zoomOut, type ViewState } from "./state.js";
import { renderSolutionBoard } from "./views/board.js";
import { renderZoomOut } from "./views/chart.js";
import { renderChat } from "./views/chat.js";
import { renderZoomIn } from "./views/detail.js";
import { renderDocument, renderDocumentConflict } from "./views/document.js";
import { renderTimerControls, type TimerPhase } from "./views/timer.js";

export interface AppOptions {
  sessionHandle: string;
  pollMs?: number;
}

export class App {
  state: ViewState;
  private pollTimer: ReturnType<typeof setInterval> | null = null;
  private lastDocumentVersion = -1;
  private timerPhases = new Map<number, TimerPhase>();
  private timerDurations = new Map<number, number | null>();
  private selectedTask = 1;

  private readonly chartPane: HTMLElement;
  private readonly detailPane: HTMLElement;
  private readonly chatPane: HTMLElement;
  private readonly documentPane: HTMLElement;
  private readonly boardPane: HTMLElement;
  private readonly timerPane: HTMLElement;
  private readonly noticePane: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: Api,
    private readonly options: AppOptions,
  ) {
    this.state = initialState(options.sessionHandle);
    this.chartPane = el("section", { id: "chart-pane" });
    this.detailPane = el("section", { id: "detail-pane" });
    this.chatPane = el("section", { id: "chat-pane" });
    this.documentPane = el("section", { id: "document-pane" });
    this.boardPane = el("section", { id: "board-pane" });
    this.timerPane = el("div", { id: "timer-pane" });
    this.noticePane = el("div", { id: "notice-pane", role: "status" });
    clear(root);
    root.append(
      el("header", {}, el("h1", {}, "worklens"), this.timerPane, this.noticePane),
      this.chartPane,
      this.detailPane,
      el(
        "div",
        { id: "workspace" },
        this.chatPane,
        this.documentPane,
        this.boardPane,
      ),
    );
  }

  async start(): Promise<void> {
    this.renderTimers();
    await this.refresh();
    const pollMs = this.options.pollMs ?? 4000;
    if (pollMs > 0) {
      this.pollTimer = setInterval(() => {
        void this.poll();
      }, pollMs);
    }
  }

  stop(): void {
    if (this.pollTimer !== null) clearInterval(this.pollTimer);
    this.pollTimer = null;
  }

  private notice(text: string): void {
    this.noticePane.textContent = text;
  }

  async refresh(): Promise<void> {
    assertValid(this.state);
    if (this.state.mode === "zoom_out") {
      this.detailPane.hidden = true;
      this.chatPane.hidden = true;
      this.documentPane.hidden = true;
      this.boardPane.hidden = true;
      this.chartPane.hidden = false;
      const view = await this.api.zoomOut();
      renderZoomOut(this.chartPane, view, {
        onSelect: (categoryId) => {
          this.state = zoomIn(this.state, categoryId);
          void this.refresh();
        },
      });
      return;
    }

    const categoryId = this.state.selectedCategoryId!;
    this.chartPane.hidden = true;
    this.detailPane.hidden = false;
    this.chatPane.hidden = false;
    this.documentPane.hidden = false;
    this.boardPane.hidden = false;

    const [detail, chat, doc, board] = await Promise.all([
      this.api.zoomIn(categoryId, this.state.page, this.state.pageSize),
      this.api.chat(categoryId),
      this.api.document(categoryId),
      this.api.solutions(categoryId),
    ]);
    renderZoomIn(this.detailPane, detail, {
      onBack: () => {
        this.state = zoomOut(this.state);
        void this.refresh();
      },
      onUpvote: () => {
        void this.api
          .upvoteProblem(categoryId, this.state.sessionHandle)
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      },
      onPage: (page) => {
        this.state = goToPage(this.state, page);
        void this.refresh();
      },
    });
    renderChat(this.chatPane, chat.messages, (body) => {
      void this.api
        .postChat(categoryId, this.state.sessionHandle, body)
        .then(() => this.refresh())
        .catch((error) => this.showError(error));
    });
    this.renderDocumentPane(categoryId, doc);
    renderSolutionBoard(this.boardPane, board.solutions, {
      onVote: (solutionId) => {
        void this.api
          .voteSolution(categoryId, solutionId, this.state.sessionHandle)
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      },
      onPropose: (body) => {
        void this.api
          .proposeSolution(categoryId, this.state.sessionHandle, body)
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      },
      onRequestAi: () => {
        void this.api
          .requestAiSolutions(categoryId)
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      },
      onFinalize: (solutionId) => {
        void this.api
          .finalize(categoryId, solutionId, [this.state.sessionHandle])
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      },
    });
  }

  private renderDocumentPane(categoryId: string, doc: SharedDocument): void {
    this.lastDocumentVersion = doc.version;
    renderDocument(this.documentPane, doc, {
      onSave: (baseVersion, body) => void this.saveDocument(categoryId, baseVersion, body),
      onAnnotate: (start, end, note) => {
        void this.api
          .annotate(categoryId, this.state.sessionHandle, start, end, note)
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      },
    });
  }

  private async saveDocument(categoryId: string, baseVersion: number, body: string): Promise<void> {
    try {
      const doc = await this.api.editDocument(categoryId, baseVersion, body);
      this.renderDocumentPane(categoryId, doc);
    } catch (error) {
      if (error instanceof ApiError && error.doc.code === "version_conflict") {
        renderDocumentConflict(
          this.documentPane,
          error.doc.current_version ?? 0,
          error.doc.current_body ?? "",
          body,
          (retryVersion, mergedBody) => void this.saveDocument(categoryId, retryVersion, mergedBody),
        );
        return;
      }
      this.showError(error);
    }
  }

  /** Polling refresh for the collaborative panes (chat and shared document). */
  async poll(): Promise<void> {
    if (this.state.mode !== "zoom_in" || !this.state.selectedCategoryId) return;
    const categoryId = this.state.selectedCategoryId;
    try {
      const chat = await this.api.chat(categoryId);
      renderChat(this.chatPane, chat.messages, (body) => {
        void this.api
          .postChat(categoryId, this.state.sessionHandle, body)
          .then(() => this.refresh())
          .catch((error) => this.showError(error));
      });
      const editor = this.documentPane.querySelector<HTMLTextAreaElement>(".doc-editor");
      const editing = editor !== null && document.activeElement === editor;
      if (!editing) {
        const doc = await this.api.document(categoryId);
        if (doc.version !== this.lastDocumentVersion) {
          this.renderDocumentPane(categoryId, doc);
        }
      }
    } catch (error) {
      this.showError(error);
    }
  }

  private renderTimers(): void {
    clear(this.timerPane);
    const selector = el("select", { class: "task-selector" }) as HTMLSelectElement;
    for (let index = 1; index <= 6; index += 1) {
      selector.append(el("option", { value: String(index) }, `task ${index}`));
    }
    selector.value = String(this.selectedTask);
    selector.addEventListener("change", () => {
      this.selectedTask = Number(selector.value);
      this.renderTimers();
    });
    const controls = el("span", { class: "timer-controls" });
    this.timerPane.append(selector, controls);
    renderTimerControls(
      controls,
      this.selectedTask,
      this.timerPhases.get(this.selectedTask) ?? "idle",
      this.timerDurations.get(this.selectedTask) ?? null,
      {
        onStart: (taskIndex) => void this.startTask(taskIndex),
        onStop: (taskIndex) => void this.stopTask(taskIndex),
      },
    );
  }

  private async startTask(taskIndex: number): Promise<void> {
    try {
      await this.api.startTask(this.state.sessionHandle, taskIndex);
      this.timerPhases.set(taskIndex, "running");
    } catch (error) {
      this.showError(error);
    }
    this.renderTimers();
  }

  private async stopTask(taskIndex: number): Promise<void> {
    try {
      const timing: TaskTiming = await this.api.stopTask(this.state.sessionHandle, taskIndex);
      this.timerPhases.set(taskIndex, "done");
      this.timerDurations.set(taskIndex, timing.duration_seconds);
    } catch (error) {
      this.showError(error);
    }
    this.renderTimers();
  }

  private showError(error: unknown): void {
    if (error instanceof ApiError) {
      this.notice(`error [${error.doc.code}]: ${error.doc.message}`);
    } else {
      this.notice(`error: ${String(error)}`);
    }
  }
}
