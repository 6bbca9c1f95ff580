// Thread drill-down: the full discussion of one bug with the recommended
// comment highlighted in place, neighbors visible above and below.

import { ApiClient } from './api';

export interface ThreadViewHandle {
  element: HTMLElement;
  load(bugId: string, focus?: number): Promise<void>;
}

export function createThreadView(
  client: ApiClient,
  options: { onBack?: () => void } = {},
): ThreadViewHandle {
  const root = document.createElement('section');
  root.className = 'thread-view';
  root.innerHTML = `
    <button type="button" class="back-link">&larr; back to results</button>
    <h2 class="thread-title"></h2>
    <p class="thread-status"></p>
    <p class="thread-error" role="alert" hidden></p>
    <ol class="thread-comments" start="0"></ol>
  `;

  const title = root.querySelector('.thread-title') as HTMLElement;
  const status = root.querySelector('.thread-status') as HTMLElement;
  const errorLine = root.querySelector('.thread-error') as HTMLElement;
  const list = root.querySelector('.thread-comments') as HTMLOListElement;
  (root.querySelector('.back-link') as HTMLButtonElement)
    .addEventListener('click', () => options.onBack?.());

  async function load(bugId: string, focus?: number): Promise<void> {
    errorLine.hidden = true;
    list.textContent = '';
    title.textContent = bugId;
    status.textContent = 'loading thread…';
    try {
      const thread = await client.thread(bugId);
      title.textContent = `${thread.bug_id} — ${thread.title}`;
      status.textContent = `status: ${thread.status}, ${thread.comments.length} comments`;
      for (const comment of thread.comments) {
        const item = document.createElement('li');
        item.className = 'thread-comment';
        item.dataset.index = String(comment.index);
        if (comment.index === focus) {
          item.classList.add('highlight');
          item.dataset.highlighted = 'true';
        }
        const meta = document.createElement('div');
        meta.className = 'comment-meta';
        meta.textContent = `comment ${comment.index}`
          + (comment.author ? ` · ${comment.author}` : '')
          + (comment.timestamp ? ` · ${comment.timestamp}` : '');
        const body = document.createElement('p');
        body.className = 'comment-body';
        body.textContent = comment.body;
        item.append(meta, body);
        list.appendChild(item);
      }
    } catch (error) {
      status.textContent = '';
      errorLine.textContent = error instanceof Error ? error.message : String(error);
      errorLine.hidden = false;
    }
  }

  return { element: root, load };
}
