/**
 * Client-side search filter with the same ranking as the server's /search:
 * key-prefix matches first, then key-substring, then expansion/definition
 * substring; ties break by key. An empty query returns the first `limit`
 * entries in key order. Runs per keystroke over the in-memory entry list,
 * so typing never causes a server round-trip.
 */

import type { GlossaryEntry } from './types';

export function sortByKey(entries: GlossaryEntry[]): GlossaryEntry[] {
  return [...entries].sort((a, b) => {
    const ka = a.key.toLowerCase();
    const kb = b.key.toLowerCase();
    return ka < kb ? -1 : ka > kb ? 1 : 0;
  });
}

export function searchEntries(
  entries: GlossaryEntry[],
  query: string,
  limit: number,
): GlossaryEntry[] {
  const ordered = sortByKey(entries);
  if (!query) return ordered.slice(0, limit);
  const needle = query.toLowerCase();
  const ranked: Array<[number, string, GlossaryEntry]> = [];
  for (const entry of ordered) {
    const key = entry.key.toLowerCase();
    let rank: number;
    if (key.startsWith(needle)) {
      rank = 0;
    } else if (key.includes(needle)) {
      rank = 1;
    } else if (entry.expansion.toLowerCase().includes(needle)
        || entry.definition.toLowerCase().includes(needle)) {
      rank = 2;
    } else {
      continue;
    }
    ranked.push([rank, key, entry]);
  }
  ranked.sort((a, b) => a[0] - b[0] || (a[1] < b[1] ? -1 : a[1] > b[1] ? 1 : 0));
  return ranked.slice(0, limit).map(([, , entry]) => entry);
}
