// Typed client for the retrorank HTTP API. The UI renders these payloads
// verbatim: no score is ever recomputed on the client.

export interface QueryResult {
  bug_id: string;
  comment_index: number;
  title: string;
  excerpt: string;
  vsm_raw: number;
  sa_raw: number;
  tr_raw: number;
  vsm_norm: number;
  sa_norm: number;
  tr_norm: number;
  combined: number;
  rank: number;
}

export interface ConfigEcho {
  name: string;
  enable_sa: boolean;
  enable_tr: boolean;
  weights: [number, number, number];
  top_m: number;
  k: number;
}

export interface QueryResponse {
  results: QueryResult[];
  timing_ms: number;
  config: ConfigEcho;
}

export interface ThreadComment {
  index: number;
  body: string;
  author: string | null;
  timestamp: string | null;
}

export interface ThreadResponse {
  bug_id: string;
  title: string;
  status: string;
  comments: ThreadComment[];
}

export interface GoldRef {
  bug_id: string;
  index: number;
}

export interface GoldsetRecord {
  query_id: string;
  query_text: string;
  gold: GoldRef[];
}

export interface EvalRunRow {
  config: string;
  n: number;
  mu: number;
  per_query_ranks: Record<string, number>;
  misses: string[];
}

export interface EvalPairRow {
  config_a: string;
  config_b: string;
  n: number;
  mu_a: number;
  mu_b: number;
  mean_diff: number;
  p: number;
  t: number;
  t_crit: number;
  decision: string;
}

export interface EvalReport {
  alpha: number;
  top_m: number;
  runs: EvalRunRow[];
  pairs: EvalPairRow[];
}

export interface QueryParams {
  q: string;
  config: string;
  k: number;
  weights?: [number, number, number] | null;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function raise(response: Response): Promise<never> {
  let detail = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    if (body && typeof body.detail === 'string') detail = body.detail;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(detail, response.status);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async query(params: QueryParams): Promise<QueryResponse> {
    const search = new URLSearchParams({
      q: params.q,
      config: params.config,
      k: String(params.k),
    });
    if (params.weights) search.set('weights', params.weights.join(','));
    const response = await this.fetchFn(`${this.baseUrl}/api/query?${search}`);
    if (!response.ok) await raise(response);
    return response.json();
  }

  async thread(bugId: string): Promise<ThreadResponse> {
    const response = await this.fetchFn(
      `${this.baseUrl}/api/bugs/${encodeURIComponent(bugId)}/comments`);
    if (!response.ok) await raise(response);
    return response.json();
  }

  async evaluate(goldset: GoldsetRecord[], configs: string[]): Promise<EvalReport> {
    const response = await this.fetchFn(`${this.baseUrl}/api/eval`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ goldset, configs }),
    });
    if (!response.ok) await raise(response);
    return response.json();
  }
}
