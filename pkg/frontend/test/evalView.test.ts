import { beforeEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api';
import { createEvalView, parseGoldset } from '../src/evalView';
import { fakeFetch, jsonResponse, sampleEvalReport } from './helpers';

const GOLDSET_TEXT = [
  '# demo goldset',
  '{"query_id": "q1", "query_text": "rotate label", "gold": [{"bug_id": "bug-00a", "index": 3}]}',
  '{"query_id": "q2", "query_text": "footnote anchor", "gold": [{"bug_id": "bug-01a", "index": 3}]}',
].join('\n');

describe('goldset parsing', () => {
  it('accepts well-formed rows and skips comments', () => {
    const parsed = parseGoldset(GOLDSET_TEXT);
    expect(parsed.errors).toEqual([]);
    expect(parsed.records.map((r) => r.query_id)).toEqual(['q1', 'q2']);
  });

  it('reports row-level messages for malformed rows', () => {
    const parsed = parseGoldset([
      '{broken json',
      '{"query_text": "missing id", "gold": [{"bug_id": "b", "index": 0}]}',
      '{"query_id": "q", "query_text": "x", "gold": []}',
      '{"query_id": "q", "query_text": "x", "gold": [{"bug_id": "b"}]}',
    ].join('\n'));
    expect(parsed.records).toEqual([]);
    expect(parsed.errors).toEqual([
      'row 1: not valid JSON',
      'row 2: missing query_id',
      'row 3: gold must be a non-empty array',
      'row 4: gold entries need bug_id and integer index',
    ]);
  });
});

describe('eval dashboard', () => {
  beforeEach(() => {
    document.body.textContent = '';
  });

  it('renders the significance table verbatim from the report', async () => {
    const report = sampleEvalReport();
    const { fetchFn, calls } = fakeFetch(() => jsonResponse(report));
    const view = createEvalView(new ApiClient('', fetchFn));
    document.body.appendChild(view.element);

    view.setGoldsetText(GOLDSET_TEXT);
    view.selectConfigs(['vsm', 'vsm+sa+tr']);
    await view.submit();

    const body = JSON.parse(String(calls[0].init?.body));
    expect(body.configs).toEqual(['vsm', 'vsm+sa+tr']);
    expect(body.goldset.length).toBe(2);

    const row = view.element.querySelector('tbody tr') as HTMLTableRowElement;
    const pair = report.pairs[0];
    const cell = (column: string) =>
      row.querySelector(`[data-column="${column}"]`)?.textContent;
    expect(cell('n')).toBe(String(pair.n));
    expect(cell('mu_a')).toBe(String(pair.mu_a));
    expect(cell('mu_b')).toBe(String(pair.mu_b));
    expect(cell('p')).toBe(String(pair.p));
    expect(cell('t')).toBe(String(pair.t));
    expect(cell('t_crit')).toBe(String(pair.t_crit));
    expect(cell('decision')).toBe('reject');

    const muValues = Array.from(
      view.element.querySelectorAll('.mu-value'), (node) => node.textContent);
    expect(muValues).toEqual(report.runs.map((run) => String(run.mu)));
  });

  it('shows the needs-two-configurations note for a single preset', async () => {
    const report = sampleEvalReport();
    report.runs = [report.runs[0]];
    report.pairs = [];
    const { fetchFn } = fakeFetch(() => jsonResponse(report));
    const view = createEvalView(new ApiClient('', fetchFn));
    document.body.appendChild(view.element);

    view.setGoldsetText(GOLDSET_TEXT);
    view.selectConfigs(['vsm']);
    await view.submit();

    const note = view.element.querySelector('.ttest-note') as HTMLElement;
    expect(note.hidden).toBe(false);
    expect(note.textContent).toContain('needs two configurations');
    expect((view.element.querySelector('.pair-table') as HTMLElement).hidden).toBe(true);
    expect(view.element.querySelector('.mu-value')?.textContent).toBe('3.7');
  });

  it('rejects malformed goldsets client-side with row messages', async () => {
    const { fetchFn, calls } = fakeFetch(() => jsonResponse(sampleEvalReport()));
    const view = createEvalView(new ApiClient('', fetchFn));
    document.body.appendChild(view.element);

    view.setGoldsetText('{bad row\n');
    await view.submit();

    expect(calls.length).toBe(0);
    const errors = view.element.querySelector('.goldset-errors') as HTMLElement;
    expect(errors.hidden).toBe(false);
    expect(errors.textContent).toContain('row 1');
  });

  it('shows a retry banner when the service is down, and retries', async () => {
    let failures = 1;
    const { fetchFn, calls } = fakeFetch(() => {
      if (failures > 0) {
        failures -= 1;
        throw new TypeError('fetch failed');
      }
      return jsonResponse(sampleEvalReport());
    });
    const view = createEvalView(new ApiClient('', fetchFn));
    document.body.appendChild(view.element);

    view.setGoldsetText(GOLDSET_TEXT);
    await view.submit();

    const banner = view.element.querySelector('.eval-banner') as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain('fetch failed');

    (banner.querySelector('.retry-button') as HTMLButtonElement).click();
    await new Promise((resolve) => setTimeout(resolve, 0));
    await Promise.resolve();

    expect(calls.length).toBe(2);
    expect(banner.hidden).toBe(true);
    expect(view.element.querySelector('tbody tr')).not.toBeNull();
  });
});
