// Search view: query box, stage toggles / custom weights, result cards with
// score-breakdown bars. One in-flight request at a time per view; responses
// superseded by a newer submit are discarded by sequence number.

import { ApiClient, QueryResponse } from './api';
import { renderBreakdown, renderScoreLine } from './breakdown';
import {
  UiQueryState, bugHash, configName, encodeSearchState, parseWeights,
  stagesOf, weightsValid,
} from './state';

export interface QueryViewHandle {
  element: HTMLElement;
  /** Submit the current form; resolves when the view settled (results or error). */
  submit(): Promise<void>;
  setState(state: UiQueryState): void;
  readState(): UiQueryState | null;
  lastResponse(): QueryResponse | null;
}

export function createQueryView(
  client: ApiClient,
  options: {
    onStateChange?: (state: UiQueryState) => void;
    navigate?: (hash: string) => void;
  } = {},
): QueryViewHandle {
  const root = document.createElement('section');
  root.className = 'query-view';
  root.innerHTML = `
    <form class="query-form">
      <input type="text" name="q" placeholder="describe the new bug…" class="query-input">
      <label><input type="checkbox" name="sa" checked> sentiment</label>
      <label><input type="checkbox" name="tr" checked> textrank</label>
      <label>k <input type="number" name="k" value="10" min="1" class="k-input"></label>
      <label><input type="checkbox" name="custom"> custom weights</label>
      <input type="text" name="weights" class="weights-input" placeholder="1,1,1" hidden>
      <button type="submit">search</button>
    </form>
    <p class="form-error" role="alert" hidden></p>
    <p class="status-line" hidden></p>
    <ol class="results" data-role="results"></ol>
  `;

  const form = root.querySelector('form') as HTMLFormElement;
  const input = root.querySelector('.query-input') as HTMLInputElement;
  const saBox = form.elements.namedItem('sa') as HTMLInputElement;
  const trBox = form.elements.namedItem('tr') as HTMLInputElement;
  const kInput = root.querySelector('.k-input') as HTMLInputElement;
  const customBox = form.elements.namedItem('custom') as HTMLInputElement;
  const weightsInput = root.querySelector('.weights-input') as HTMLInputElement;
  const errorLine = root.querySelector('.form-error') as HTMLParagraphElement;
  const statusLine = root.querySelector('.status-line') as HTMLParagraphElement;
  const list = root.querySelector('.results') as HTMLOListElement;

  let sequence = 0;
  let settled: Promise<void> = Promise.resolve();
  let last: QueryResponse | null = null;

  customBox.addEventListener('change', () => {
    weightsInput.hidden = !customBox.checked;
  });

  function showError(message: string): void {
    errorLine.textContent = message;
    errorLine.hidden = false;
  }

  function readState(): UiQueryState | null {
    errorLine.hidden = true;
    const q = input.value.trim();
    if (!q) {
      showError('enter a query first — nothing was sent');
      return null;
    }
    const k = Number(kInput.value);
    if (!Number.isInteger(k) || k < 1) {
      showError('k must be a positive integer — nothing was sent');
      return null;
    }
    let weights: [number, number, number] | null = null;
    if (customBox.checked) {
      weights = parseWeights(weightsInput.value);
      if (!weights || !weightsValid(weights)) {
        showError('custom weights must be three non-negative numbers, not all zero');
        return null;
      }
    }
    return { q, config: configName(saBox.checked, trBox.checked), k, weights };
  }

  function setState(state: UiQueryState): void {
    input.value = state.q;
    const stages = stagesOf(state.config);
    saBox.checked = stages.sa;
    trBox.checked = stages.tr;
    kInput.value = String(state.k);
    customBox.checked = state.weights !== null;
    weightsInput.hidden = state.weights === null;
    weightsInput.value = state.weights ? state.weights.join(',') : '';
  }

  function renderResults(response: QueryResponse): void {
    list.textContent = '';
    statusLine.hidden = false;
    statusLine.textContent = response.results.length
      ? `${response.results.length} results (config ${response.config.name})`
      : 'no matching comments';
    for (const result of response.results) {
      const item = document.createElement('li');
      item.className = 'result-card';
      item.dataset.bugId = result.bug_id;
      item.dataset.commentIndex = String(result.comment_index);

      const heading = document.createElement('a');
      heading.className = 'result-heading';
      heading.href = bugHash(result.bug_id, result.comment_index);
      heading.dataset.role = 'result-link';
      const rank = document.createElement('span');
      rank.className = 'result-rank';
      rank.dataset.role = 'rank';
      rank.textContent = String(result.rank);
      heading.append(rank, ` ${result.bug_id} — ${result.title}`);
      heading.addEventListener('click', (event) => {
        if (options.navigate) {
          event.preventDefault();
          options.navigate(bugHash(result.bug_id, result.comment_index));
        }
      });

      const excerpt = document.createElement('p');
      excerpt.className = 'result-excerpt';
      excerpt.textContent = result.excerpt;

      item.append(heading, renderScoreLine(result, response.config),
                  renderBreakdown(result, response.config), excerpt);
      list.appendChild(item);
    }
  }

  function submit(): Promise<void> {
    const state = readState();
    if (!state) return settled;
    options.onStateChange?.(state);
    const ticket = ++sequence;
    statusLine.hidden = false;
    statusLine.textContent = 'searching…';
    settled = client
      .query({ q: state.q, config: state.config, k: state.k, weights: state.weights })
      .then((response) => {
        if (ticket !== sequence) return; // superseded by a newer submit
        last = response;
        renderResults(response);
      })
      .catch((error: unknown) => {
        if (ticket !== sequence) return;
        statusLine.hidden = true;
        showError(error instanceof Error ? error.message : String(error));
      });
    return settled;
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void submit();
  });

  return {
    element: root,
    submit,
    setState,
    readState,
    lastResponse: () => last,
  };
}

export function stateToHash(state: UiQueryState): string {
  return encodeSearchState(state);
}
