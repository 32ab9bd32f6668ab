// View state: which zoom level is showing and for which category.

export type Mode = "zoom_out" | "zoom_in";

export interface ViewState {
  mode: Mode;
  selectedCategoryId?: string;
  page: number;
  pageSize: number;
  sessionHandle: string;
}

export function initialState(sessionHandle: string): ViewState {
  return { mode: "zoom_out", page: 1, pageSize: 10, sessionHandle };
}

export function zoomIn(state: ViewState, categoryId: string): ViewState {
  return { ...state, mode: "zoom_in", selectedCategoryId: categoryId, page: 1 };
}

export function zoomOut(state: ViewState): ViewState {
  return { ...state, mode: "zoom_out", selectedCategoryId: undefined, page: 1 };
}

export function goToPage(state: ViewState, page: number): ViewState {
  return { ...state, page: Math.max(1, page) };
}

export function assertValid(state: ViewState): void {
  if (state.mode === "zoom_in" && !state.selectedCategoryId) {
    throw new Error("zoom_in requires a selected category");
  }
}
