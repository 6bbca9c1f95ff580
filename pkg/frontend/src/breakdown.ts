// Stacked contribution bar: the fusion is linear, so weight x normalized
// score segments tile the combined score exactly. Widths are presentation
// only; every number shown as text comes verbatim from the API payload.

import type { ConfigEcho, QueryResult } from './api';

const SEGMENTS: Array<{
  key: 'vsm' | 'sa' | 'tr';
  norm: keyof QueryResult;
  weight: number;
}> = [
  { key: 'vsm', norm: 'vsm_norm', weight: 0 },
  { key: 'sa', norm: 'sa_norm', weight: 1 },
  { key: 'tr', norm: 'tr_norm', weight: 2 },
];

export function renderBreakdown(result: QueryResult, config: ConfigEcho): HTMLElement {
  const bar = document.createElement('div');
  bar.className = 'breakdown-bar';
  bar.dataset.role = 'breakdown';

  const enabled: Record<'vsm' | 'sa' | 'tr', boolean> = {
    vsm: true,
    sa: config.enable_sa,
    tr: config.enable_tr,
  };

  for (const segment of SEGMENTS) {
    if (!enabled[segment.key]) continue;
    const weight = config.weights[segment.weight];
    const contribution = weight * (result[segment.norm] as number);
    const span = document.createElement('span');
    span.className = `breakdown-segment breakdown-${segment.key}`;
    span.dataset.component = segment.key;
    span.style.width = `${(contribution * 100).toFixed(2)}%`;
    span.title = `${segment.key} contribution`;
    bar.appendChild(span);
  }
  return bar;
}

export function renderScoreLine(result: QueryResult, config: ConfigEcho): HTMLElement {
  const line = document.createElement('div');
  line.className = 'score-line';
  const parts: Array<[string, number]> = [['combined', result.combined]];
  parts.push(['vsm', result.vsm_norm]);
  if (config.enable_sa) parts.push(['sa', result.sa_norm]);
  if (config.enable_tr) parts.push(['tr', result.tr_norm]);
  for (const [label, value] of parts) {
    const span = document.createElement('span');
    span.className = `score score-${label}`;
    span.dataset.score = label;
    // verbatim API number: String() round-trips the JSON value untouched
    span.textContent = `${label}=${String(value)}`;
    line.appendChild(span);
  }
  return line;
}
