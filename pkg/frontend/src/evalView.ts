// Evaluation dashboard: upload a goldset, pick configurations, POST to the
// eval endpoint, and render the significance table exactly as returned.

import { ApiClient, EvalReport, GoldsetRecord } from './api';
import { PRESETS } from './state';

export const PAIR_COLUMNS = ['n', 'mu_a', 'mu_b', 'p', 't', 't_crit', 'decision'] as const;

export interface GoldsetParse {
  records: GoldsetRecord[];
  errors: string[];
}

/** Parse goldset JSONL; collects one message per bad row instead of bailing. */
export function parseGoldset(text: string): GoldsetParse {
  const records: GoldsetRecord[] = [];
  const errors: string[] = [];
  const lines = text.split('\n');
  lines.forEach((line, i) => {
    const row = i + 1;
    const stripped = line.trim();
    if (!stripped || stripped.startsWith('#')) return;
    let value: unknown;
    try {
      value = JSON.parse(stripped);
    } catch {
      errors.push(`row ${row}: not valid JSON`);
      return;
    }
    const record = value as Partial<GoldsetRecord>;
    if (typeof record.query_id !== 'string' || !record.query_id) {
      errors.push(`row ${row}: missing query_id`);
      return;
    }
    if (typeof record.query_text !== 'string' || !record.query_text.trim()) {
      errors.push(`row ${row}: missing query_text`);
      return;
    }
    if (!Array.isArray(record.gold) || record.gold.length === 0) {
      errors.push(`row ${row}: gold must be a non-empty array`);
      return;
    }
    for (const ref of record.gold) {
      if (typeof ref?.bug_id !== 'string' || !Number.isInteger(ref?.index)) {
        errors.push(`row ${row}: gold entries need bug_id and integer index`);
        return;
      }
    }
    records.push(record as GoldsetRecord);
  });
  return { records, errors };
}

export interface EvalViewHandle {
  element: HTMLElement;
  setGoldsetText(text: string): void;
  selectConfigs(names: string[]): void;
  submit(): Promise<void>;
  lastReport(): EvalReport | null;
}

export function createEvalView(client: ApiClient): EvalViewHandle {
  const root = document.createElement('section');
  root.className = 'eval-view';
  const configBoxes = PRESETS.map((name) =>
    `<label><input type="checkbox" name="config" value="${name}" checked> ${name}</label>`,
  ).join('\n      ');
  root.innerHTML = `
    <form class="eval-form">
      <label class="goldset-file-label">goldset file
        <input type="file" name="goldset-file" accept=".jsonl,.txt,application/json">
      </label>
      <textarea name="goldset" class="goldset-input" rows="6"
        placeholder='{"query_id": "q1", "query_text": "…", "gold": [{"bug_id": "…", "index": 0}]}'></textarea>
      ${configBoxes}
      <button type="submit">evaluate</button>
    </form>
    <ul class="goldset-errors" role="alert" hidden></ul>
    <p class="eval-banner" role="alert" hidden>
      <span class="banner-text"></span>
      <button type="button" class="retry-button">retry</button>
    </p>
    <div class="mu-bars" data-role="mu-bars"></div>
    <p class="ttest-note" hidden></p>
    <table class="pair-table" hidden>
      <thead><tr>
        <th>pair</th><th>n</th><th>mu_a</th><th>mu_b</th>
        <th>p</th><th>t</th><th>t_crit</th><th>decision</th>
      </tr></thead>
      <tbody></tbody>
    </table>
  `;

  const form = root.querySelector('.eval-form') as HTMLFormElement;
  const fileInput = form.elements.namedItem('goldset-file') as HTMLInputElement;
  const textarea = root.querySelector('.goldset-input') as HTMLTextAreaElement;
  const errorList = root.querySelector('.goldset-errors') as HTMLUListElement;
  const banner = root.querySelector('.eval-banner') as HTMLParagraphElement;
  const bannerText = banner.querySelector('.banner-text') as HTMLElement;
  const muBars = root.querySelector('.mu-bars') as HTMLDivElement;
  const note = root.querySelector('.ttest-note') as HTMLParagraphElement;
  const table = root.querySelector('.pair-table') as HTMLTableElement;
  const tbody = table.querySelector('tbody') as HTMLTableSectionElement;

  let last: EvalReport | null = null;

  fileInput.addEventListener('change', () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    void file.text().then((text) => {
      textarea.value = text;
    });
  });

  function selectedConfigs(): string[] {
    return Array.from(form.querySelectorAll<HTMLInputElement>('input[name="config"]'))
      .filter((box) => box.checked)
      .map((box) => box.value);
  }

  function showRowErrors(messages: string[]): void {
    errorList.textContent = '';
    for (const message of messages) {
      const item = document.createElement('li');
      item.textContent = message;
      errorList.appendChild(item);
    }
    errorList.hidden = messages.length === 0;
  }

  function renderReport(report: EvalReport): void {
    muBars.textContent = '';
    const maxMu = Math.max(...report.runs.map((run) => run.mu), 1);
    for (const run of report.runs) {
      const row = document.createElement('div');
      row.className = 'mu-row';
      const label = document.createElement('span');
      label.className = 'mu-label';
      label.textContent = run.config;
      const bar = document.createElement('span');
      bar.className = 'mu-bar';
      bar.style.width = `${((run.mu / maxMu) * 100).toFixed(1)}%`;
      const value = document.createElement('span');
      value.className = 'mu-value';
      value.dataset.config = run.config;
      value.textContent = String(run.mu); // verbatim API number
      row.append(label, bar, value);
      muBars.appendChild(row);
    }

    tbody.textContent = '';
    if (report.pairs.length === 0) {
      table.hidden = true;
      note.hidden = false;
      note.textContent = 'needs two configurations for the paired t-test';
      return;
    }
    note.hidden = true;
    table.hidden = false;
    for (const pair of report.pairs) {
      const row = document.createElement('tr');
      row.dataset.pair = `${pair.config_a}|${pair.config_b}`;
      const name = document.createElement('td');
      name.textContent = `${pair.config_a} vs ${pair.config_b}`;
      row.appendChild(name);
      for (const column of PAIR_COLUMNS) {
        const cell = document.createElement('td');
        cell.dataset.column = column;
        cell.textContent = String(pair[column]); // verbatim API value
        if (column === 'decision') {
          const badge = document.createElement('span');
          badge.className = `decision-badge decision-${pair.decision}`;
          badge.textContent = String(pair.decision);
          cell.textContent = '';
          cell.appendChild(badge);
        }
        row.appendChild(cell);
      }
      tbody.appendChild(row);
    }
  }

  async function submit(): Promise<void> {
    banner.hidden = true;
    const parsed = parseGoldset(textarea.value);
    showRowErrors(parsed.errors);
    if (parsed.errors.length > 0 || parsed.records.length === 0) {
      if (parsed.records.length === 0 && parsed.errors.length === 0) {
        showRowErrors(['goldset is empty']);
      }
      return;
    }
    const configs = selectedConfigs();
    if (configs.length === 0) {
      showRowErrors(['select at least one configuration']);
      return;
    }
    try {
      const report = await client.evaluate(parsed.records, configs);
      last = report;
      renderReport(report);
    } catch (error) {
      bannerText.textContent = error instanceof Error ? error.message : String(error);
      banner.hidden = false;
    }
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void submit();
  });
  (banner.querySelector('.retry-button') as HTMLButtonElement)
    .addEventListener('click', () => void submit());

  return {
    element: root,
    setGoldsetText: (text) => {
      textarea.value = text;
    },
    selectConfigs: (names) => {
      for (const box of form.querySelectorAll<HTMLInputElement>('input[name="config"]')) {
        box.checked = names.includes(box.value);
      }
    },
    submit,
    lastReport: () => last,
  };
}
