// Typed client for the service HTTP API. Every number the UI displays comes
// from these payloads; the client never recomputes domain data.

export interface ZoomOutBar {
  category_id: string;
  name: string;
  complaint_count: number;
  upvote_count: number;
  description: string;
}

export interface ZoomOutView {
  bars: ZoomOutBar[];
  total_categorized: number;
  total_unassigned: number;
}

export interface Post {
  id: string;
  source_kind: string;
  source_name: string;
  body: string;
  created_at: number;
}

export interface ZoomInView {
  category_id: string;
  name: string;
  summary: string | null;
  posts: Post[];
  page: number;
  page_size: number;
  total_posts: number;
  upvote_count: number;
}

export interface SolutionEntry {
  id: string;
  category_id: string;
  body: string;
  origin: "human" | "ai";
  author_handle: string | null;
  run_id: string | null;
  vote_count: number;
  disclaimer_required: boolean;
  created_at: number;
  disclaimer?: string;
  origin_label?: string;
}

export interface ChatMessage {
  id: string;
  category_id: string;
  author_handle: string;
  body: string;
  created_at: number;
}

export interface Annotation {
  id: string;
  author_handle: string;
  start: number;
  end: number;
  note: string;
  created_at: number;
  orphaned: boolean;
}

export interface SharedDocument {
  category_id: string;
  version: number;
  body: string;
  annotations: Annotation[];
}

export interface FinalSolution {
  category_id: string;
  solution_id: string;
  decided_at: number;
  decided_by: string[];
  solution: SolutionEntry;
}

export interface TaskTiming {
  session_id: string;
  task_index: number;
  started_at: number;
  stopped_at: number | null;
  duration_seconds: number | null;
}

export interface ErrorDoc {
  code: string;
  message: string;
  current_version?: number;
  current_body?: string;
  [key: string]: unknown;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public doc: ErrorDoc,
  ) {
    super(doc.message);
  }
}

async function request<T>(path: string, options: RequestInit = {}): Promise<T> {
  const response = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...options,
  });
  if (!response.ok) {
    let doc: ErrorDoc = { code: "http_error", message: `request failed: ${response.status}` };
    try {
      const body = (await response.json()) as { error?: ErrorDoc };
      if (body.error) doc = body.error;
    } catch {
      // non-JSON error body; keep the fallback doc
    }
    throw new ApiError(response.status, doc);
  }
  return (await response.json()) as T;
}

const post = <T>(path: string, body: unknown): Promise<T> =>
  request<T>(path, { method: "POST", body: JSON.stringify(body) });

export const api = {
  zoomOut: () => request<ZoomOutView>("/problems"),
  zoomIn: (categoryId: string, page: number, pageSize: number) =>
    request<ZoomInView>(
      `/problems/${encodeURIComponent(categoryId)}?page=${page}&page_size=${pageSize}`,
    ),
  upvoteProblem: (categoryId: string, voter: string) =>
    post<{ upvote_count: number }>(`/problems/${encodeURIComponent(categoryId)}/upvote`, {
      voter_handle: voter,
    }),

  chat: (categoryId: string) =>
    request<{ messages: ChatMessage[] }>(`/problems/${encodeURIComponent(categoryId)}/chat`),
  postChat: (categoryId: string, author: string, body: string) =>
    post<ChatMessage>(`/problems/${encodeURIComponent(categoryId)}/chat`, {
      author_handle: author,
      body,
    }),

  document: (categoryId: string) =>
    request<SharedDocument>(`/problems/${encodeURIComponent(categoryId)}/document`),
  editDocument: (categoryId: string, baseVersion: number, body: string) =>
    request<SharedDocument>(`/problems/${encodeURIComponent(categoryId)}/document`, {
      method: "PUT",
      body: JSON.stringify({ base_version: baseVersion, body }),
    }),
  annotate: (categoryId: string, author: string, start: number, end: number, note: string) =>
    post<Annotation>(`/problems/${encodeURIComponent(categoryId)}/document/annotations`, {
      author_handle: author,
      start,
      end,
      note,
    }),

  solutions: (categoryId: string) =>
    request<{ solutions: SolutionEntry[] }>(
      `/problems/${encodeURIComponent(categoryId)}/solutions`,
    ),
  proposeSolution: (categoryId: string, author: string, body: string) =>
    post<SolutionEntry>(`/problems/${encodeURIComponent(categoryId)}/solutions`, {
      author_handle: author,
      body,
    }),
  voteSolution: (categoryId: string, solutionId: string, voter: string) =>
    post<{ vote_count: number }>(
      `/problems/${encodeURIComponent(categoryId)}/solutions/${encodeURIComponent(solutionId)}/vote`,
      { voter_handle: voter },
    ),
  requestAiSolutions: (categoryId: string) =>
    post<{ solutions: SolutionEntry[] }>(
      `/problems/${encodeURIComponent(categoryId)}/ai-solutions`,
      {},
    ),
  finalize: (categoryId: string, solutionId: string, decidedBy: string[]) =>
    post<FinalSolution>(`/problems/${encodeURIComponent(categoryId)}/final`, {
      solution_id: solutionId,
      decided_by: decidedBy,
    }),
  final: (categoryId: string) =>
    request<{ final: FinalSolution | null }>(
      `/problems/${encodeURIComponent(categoryId)}/final`,
    ),

  startTask: (sessionId: string, taskIndex: number) =>
    post<TaskTiming>(
      `/sessions/${encodeURIComponent(sessionId)}/tasks/${taskIndex}/start`,
      {},
    ),
  stopTask: (sessionId: string, taskIndex: number) =>
    post<TaskTiming>(
      `/sessions/${encodeURIComponent(sessionId)}/tasks/${taskIndex}/stop`,
      {},
    ),
};

export type Api = typeof api;
