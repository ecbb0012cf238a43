/** Typed client for the pattern-teaching service HTTP API. */

export interface Qap {
  question: string;
  answer: string;
  source: string;
  entry_id: number;
}

export interface TeachRequest {
  id: number;
  sentence: string;
  built_sequence: string[];
  best_match_class: string;
  created_at: string;
  status: string;
  entry_id: number | null;
}

export interface DbEntry {
  id: number;
  x: string[];
  y: string[];
  decl: string;
  interr: string;
  origin: string;
  created_at: string;
}

export interface GenerateResponse {
  qaps: Qap[];
  teach_requests: TeachRequest[];
}

export interface TeachResponse {
  entry?: DbEntry;
  duplicate?: boolean;
  error?: { code: string; detail: string };
  qaps_now: Qap[];
}

export interface EntriesPage {
  entries: DbEntry[];
  page: number;
  per_page: number;
  total: number;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

async function parseError(resp: Response): Promise<never> {
  let code = "http_error";
  let detail = resp.statusText;
  try {
    const body = (await resp.json()) as { code?: string; detail?: string };
    if (body.code) code = body.code;
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body: keep the status text
  }
  throw new ApiError(resp.status, code, detail);
}

export class ServiceClient {
  constructor(readonly baseUrl: string) {}

  private async get<T>(path: string): Promise<T> {
    const resp = await fetch(this.baseUrl + path);
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as T;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as T;
  }

  health(): Promise<{ status: string; entries: number }> {
    return this.get("/health");
  }

  generate(text: string): Promise<GenerateResponse> {
    return this.post("/generate", { text });
  }

  teachQueue(): Promise<{ requests: TeachRequest[] }> {
    return this.get("/teach/queue");
  }

  teach(requestId: number, interrogative: string): Promise<TeachResponse> {
    return this.post("/teach", { request_id: requestId, interrogative });
  }

  entries(page = 1, perPage = 50): Promise<EntriesPage> {
    return this.get(`/db/entries?page=${page}&per_page=${perPage}`);
  }
}
