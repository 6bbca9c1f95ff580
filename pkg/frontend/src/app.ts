// Application shell: hash routing between the search view, thread view, and
// evaluation dashboard. Query state round-trips through the URL.

import { ApiClient } from './api';
import { createEvalView } from './evalView';
import { createQueryView } from './queryView';
import { createThreadView } from './threadView';
import { DEFAULT_STATE, decodeRoute, decodeSearchState, encodeSearchState } from './state';

export interface App {
  element: HTMLElement;
  /** Re-render from the current location hash; resolves when settled. */
  sync(): Promise<void>;
  queryView: ReturnType<typeof createQueryView>;
  evalView: ReturnType<typeof createEvalView>;
  threadView: ReturnType<typeof createThreadView>;
}

export function createApp(client: ApiClient, win: Window = window): App {
  const root = document.createElement('div');
  root.className = 'app';
  root.innerHTML = `
    <header class="app-header">
      <h1>retrorank</h1>
      <nav>
        <a href="#/search" data-nav="search">search</a>
        <a href="#/eval" data-nav="eval">evaluation</a>
      </nav>
    </header>
    <main class="app-main"></main>
  `;
  const main = root.querySelector('.app-main') as HTMLElement;

  let lastSearchHash = '#/search';

  const queryView = createQueryView(client, {
    onStateChange: (state) => {
      lastSearchHash = encodeSearchState(state);
      if (win.location.hash !== lastSearchHash) {
        win.history.replaceState(null, '', lastSearchHash);
      }
    },
    navigate: (hash) => {
      win.location.hash = hash;
    },
  });
  const threadView = createThreadView(client, {
    onBack: () => {
      win.location.hash = lastSearchHash;
    },
  });
  const evalView = createEvalView(client);

  function show(view: HTMLElement): void {
    if (main.firstChild !== view) {
      main.textContent = '';
      main.appendChild(view);
    }
  }

  let loadedThread: string | null = null;

  async function doSync(): Promise<void> {
    const route = decodeRoute(win.location.hash);
    if (route.view === 'bug' && route.bugId) {
      show(threadView.element);
      const target = `${route.bugId}|${route.focus ?? ''}`;
      if (target === loadedThread) return;
      loadedThread = target;
      await threadView.load(route.bugId, route.focus);
      return;
    }
    loadedThread = null;
    if (route.view === 'eval') {
      show(evalView.element);
      return;
    }
    show(queryView.element);
    const state = decodeSearchState(win.location.hash);
    if (state.q) {
      // a hashchange fired for a request that is already rendered (e.g. the
      // submit itself rewrote the URL): nothing to redo
      if (win.location.hash === lastSearchHash && queryView.lastResponse()) return;
      lastSearchHash = win.location.hash;
      queryView.setState(state);
      await queryView.submit();
    } else {
      queryView.setState({ ...DEFAULT_STATE });
    }
  }

  // syncs are serialized: a hashchange arriving while one runs queues behind
  // it instead of racing its in-flight request
  let chain: Promise<void> = Promise.resolve();
  function sync(): Promise<void> {
    chain = chain.then(doSync, doSync);
    return chain;
  }

  win.addEventListener('hashchange', () => void sync());
  return { element: root, sync, queryView, evalView, threadView };
}
