// Query state lives in the URL hash so result pages are shareable links.
// Routes: #/search?q=…&config=…&k=…[&weights=a,b,c]   #/bug/<id>?focus=<n>   #/eval

export interface UiQueryState {
  q: string;
  config: string;
  k: number;
  weights: [number, number, number] | null;
}

export const DEFAULT_STATE: UiQueryState = {
  q: '',
  config: 'vsm+sa+tr',
  k: 10,
  weights: null,
};

export const PRESETS = ['vsm', 'vsm+sa', 'vsm+tr', 'vsm+sa+tr'] as const;

export function configName(enableSa: boolean, enableTr: boolean): string {
  return 'vsm' + (enableSa ? '+sa' : '') + (enableTr ? '+tr' : '');
}

export function stagesOf(config: string): { sa: boolean; tr: boolean } {
  const parts = config.split('+');
  return { sa: parts.includes('sa'), tr: parts.includes('tr') };
}

export function parseWeights(raw: string): [number, number, number] | null {
  const parts = raw.split(',').map((p) => Number(p.trim()));
  if (parts.length !== 3 || parts.some((v) => !Number.isFinite(v))) return null;
  return [parts[0], parts[1], parts[2]];
}

/** Non-negative and not all zero, per the custom-weight input contract. */
export function weightsValid(weights: [number, number, number]): boolean {
  return weights.every((w) => w >= 0) && weights.some((w) => w > 0);
}

export function encodeSearchState(state: UiQueryState): string {
  const params = new URLSearchParams({
    q: state.q,
    config: state.config,
    k: String(state.k),
  });
  if (state.weights) params.set('weights', state.weights.join(','));
  return `#/search?${params.toString()}`;
}

export function decodeSearchState(hash: string): UiQueryState {
  const queryStart = hash.indexOf('?');
  if (!hash.startsWith('#/search') || queryStart < 0) return { ...DEFAULT_STATE };
  const params = new URLSearchParams(hash.slice(queryStart + 1));
  const k = Number(params.get('k') ?? DEFAULT_STATE.k);
  const rawWeights = params.get('weights');
  return {
    q: params.get('q') ?? '',
    config: params.get('config') ?? DEFAULT_STATE.config,
    k: Number.isInteger(k) && k >= 1 ? k : DEFAULT_STATE.k,
    weights: rawWeights ? parseWeights(rawWeights) : null,
  };
}

export interface Route {
  view: 'search' | 'bug' | 'eval';
  bugId?: string;
  focus?: number;
}

export function decodeRoute(hash: string): Route {
  if (hash.startsWith('#/bug/')) {
    const rest = hash.slice('#/bug/'.length);
    const queryStart = rest.indexOf('?');
    const bugId = decodeURIComponent(queryStart < 0 ? rest : rest.slice(0, queryStart));
    let focus: number | undefined;
    if (queryStart >= 0) {
      const parsed = Number(new URLSearchParams(rest.slice(queryStart + 1)).get('focus'));
      if (Number.isInteger(parsed) && parsed >= 0) focus = parsed;
    }
    return { view: 'bug', bugId, focus };
  }
  if (hash.startsWith('#/eval')) return { view: 'eval' };
  return { view: 'search' };
}

export function bugHash(bugId: string, focus: number): string {
  return `#/bug/${encodeURIComponent(bugId)}?focus=${focus}`;
}
