/**
 * Dictionary search page: the entry list is fetched once when the page
 * opens, then every keystroke filters it in memory with the same ranking
 * the server uses; no per-keystroke round-trips. A fetch failure shows a
 * retry button instead of results.
 */

import { GlossaryApi } from './api';
import { loadConfig } from './config';
import { searchEntries } from './ranking';
import type { GlossaryEntry } from './types';

const RESULT_LIMIT = 50;

export interface SearchPageHandles {
  input: HTMLInputElement;
  results: HTMLElement;
  status: HTMLElement;
  retry: HTMLButtonElement;
}

export class SearchPage {
  private entries: GlossaryEntry[] = [];
  private loaded = false;

  constructor(private readonly api: GlossaryApi,
              private readonly ui: SearchPageHandles) {
    this.ui.input.addEventListener('input', () => this.render());
    this.ui.retry.addEventListener('click', () => void this.load());
  }

  async load(): Promise<void> {
    this.ui.retry.hidden = true;
    this.ui.status.textContent = 'Loading dictionary…';
    try {
      this.entries = await this.api.allEntries();
      this.loaded = true;
      this.ui.status.textContent = `${this.entries.length} entries loaded`;
      this.render();
    } catch {
      this.loaded = false;
      this.ui.status.textContent = 'Could not load the dictionary.';
      this.ui.retry.hidden = false;
    }
  }

  filter(query: string): GlossaryEntry[] {
    return searchEntries(this.entries, query, RESULT_LIMIT);
  }

  render(): void {
    if (!this.loaded) return;
    const query = this.ui.input.value.trim();
    const hits = this.filter(query);
    const doc = this.ui.results.ownerDocument;
    this.ui.results.textContent = '';
    if (hits.length === 0) {
      const empty = doc.createElement('p');
      empty.className = 'empty';
      empty.textContent = query
        ? `No entries match "${query}".`
        : 'The dictionary is empty.';
      this.ui.results.appendChild(empty);
      return;
    }
    const list = doc.createElement('dl');
    for (const entry of hits) {
      const term = doc.createElement('dt');
      term.textContent = `${entry.key} — ${entry.expansion}`;
      const detail = doc.createElement('dd');
      detail.textContent = entry.definition;
      list.appendChild(term);
      list.appendChild(detail);
    }
    this.ui.results.appendChild(list);
  }
}

async function main(): Promise<void> {
  const config = await loadConfig();
  const page = new SearchPage(new GlossaryApi(config.serviceUrl), {
    input: document.getElementById('query') as HTMLInputElement,
    results: document.getElementById('results') as HTMLElement,
    status: document.getElementById('status') as HTMLElement,
    retry: document.getElementById('retry') as HTMLButtonElement,
  });
  await page.load();
}

if (typeof document !== 'undefined' && document.getElementById('query')) {
  void main();
}
