/** Thin client for the glossary service HTTP API. */

import type { ClassifyVerdict, GlossaryEntry } from './types';

type FetchLike = typeof fetch;

export class ServiceError extends Error {}

export class GlossaryApi {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl: FetchLike = fetch) {
    this.base = baseUrl.replace(/\/+$/, '');
    this.fetchImpl = fetchImpl;
  }

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.base}${path}`, init);
    } catch (err) {
      throw new ServiceError(`glossary service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      throw new ServiceError(`glossary service error ${response.status}`);
    }
    return response.json();
  }

  async terms(): Promise<string[]> {
    const body = await this.request('/terms') as { keys: string[] };
    return body.keys;
  }

  async entry(key: string): Promise<GlossaryEntry> {
    return await this.request(`/terms/${encodeURIComponent(key)}`) as GlossaryEntry;
  }

  async search(query: string, limit: number): Promise<GlossaryEntry[]> {
    const params = new URLSearchParams({ q: query, limit: String(limit) });
    const body = await this.request(`/search?${params}`) as { results: GlossaryEntry[] };
    return body.results;
  }

  async allEntries(): Promise<GlossaryEntry[]> {
    return this.search('', 100000);
  }

  async classify(text: string): Promise<ClassifyVerdict> {
    return await this.request('/classify', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ text }),
    }) as ClassifyVerdict;
  }
}
