import type { EvalReport, FetchLike, QueryResponse } from '../src/api';

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

/** Records every request; replies from a handler map keyed by pathname. */
export function fakeFetch(
  handler: (url: URL, init?: RequestInit) => Response | Promise<Response>,
) {
  const calls: Array<{ url: URL; init?: RequestInit }> = [];
  const fetchFn: FetchLike = async (input, init) => {
    const url = new URL(input, 'http://fake.test');
    calls.push({ url, init });
    return handler(url, init);
  };
  return { fetchFn, calls };
}

export function sampleQueryResponse(): QueryResponse {
  return {
    results: [
      {
        bug_id: 'bug-00a', comment_index: 3,
        title: 'Rotate label issue in the axis chart',
        excerpt: 'the rotate label and axis chart is now verified and works.',
        vsm_raw: 0.6835619466527046, sa_raw: 0.13333333333333333,
        tr_raw: 1.9901239480114423, vsm_norm: 0.7822915108685744,
        sa_norm: 0.7999999999999999, tr_norm: 1.0,
        combined: 0.8607638369561914, rank: 1,
      },
      {
        bug_id: 'bug-00c', comment_index: 2,
        title: 'Rotate label issue in the axis chart',
        excerpt: 'the axis rotate axis label for me.',
        vsm_raw: 0.6400725680386895, sa_raw: 0.2,
        tr_raw: 1.720760199488443, vsm_norm: 0.6706946512296902,
        sa_norm: 1.0, tr_norm: 0.5345529823667626,
        combined: 0.7350825445321509, rank: 2,
      },
    ],
    timing_ms: 1.234,
    config: {
      name: 'vsm+sa+tr', enable_sa: true, enable_tr: true,
      weights: [1 / 3, 1 / 3, 1 / 3], top_m: 50, k: 10,
    },
  };
}

export function sampleEvalReport(): EvalReport {
  return {
    alpha: 0.05,
    top_m: 50,
    runs: [
      { config: 'vsm', n: 10, mu: 3.7, per_query_ranks: {}, misses: [] },
      { config: 'vsm+sa+tr', n: 10, mu: 1.1, per_query_ranks: {}, misses: [] },
    ],
    pairs: [
      {
        config_a: 'vsm', config_b: 'vsm+sa+tr', n: 10,
        mu_a: 3.7, mu_b: 1.1, mean_diff: 2.6,
        p: 0.00003164280749185668, t: 7.64927, t_crit: 2.2621571627,
        decision: 'reject',
      },
    ],
  };
}
