/**
 * Whole-word, case-insensitive key matching with the same contract as the
 * server engine: a boundary neighbor is anything that is not a letter,
 * digit, or underscore; overlaps resolve longest-match first, then
 * leftmost. Contract fixtures generated from the engine pin both
 * implementations to identical output.
 */

import type { MatchSpan } from './types';

const WORD_CHAR = /[\p{L}\p{N}_]/u;

export function isWordChar(ch: string): boolean {
  return WORD_CHAR.test(ch);
}

function candidatesForKey(text: string, folded: string, key: string): MatchSpan[] {
  const foldedKey = key.toLowerCase();
  const out: MatchSpan[] = [];
  if (foldedKey.length === 0) return out;
  let pos = 0;
  while (true) {
    const start = folded.indexOf(foldedKey, pos);
    if (start === -1) break;
    const end = start + foldedKey.length;
    const beforeOk = start === 0 || !isWordChar(text[start - 1]);
    const afterOk = end >= text.length || !isWordChar(text[end]);
    if (beforeOk && afterOk) {
      out.push({ key, start, end, surface: text.slice(start, end) });
    }
    pos = start + 1; // step by one so overlapping occurrences are collected
  }
  return out;
}

export function dedupeKeys(keys: string[]): string[] {
  const seen = new Set<string>();
  const out: string[] = [];
  for (const key of keys) {
    const folded = key.toLowerCase();
    if (key && !seen.has(folded)) {
      seen.add(folded);
      out.push(key);
    }
  }
  return out;
}

export function findMatches(text: string, keys: string[]): MatchSpan[] {
  if (!text) return [];
  const folded = text.toLowerCase();
  if (folded.length !== text.length) {
    // exotic case folding shifted offsets; fall back to per-position folds
    return findMatchesSlow(text, keys);
  }
  const candidates: MatchSpan[] = [];
  for (const key of dedupeKeys(keys)) {
    candidates.push(...candidatesForKey(text, folded, key));
  }
  return selectNonOverlapping(candidates);
}

function findMatchesSlow(text: string, keys: string[]): MatchSpan[] {
  const candidates: MatchSpan[] = [];
  for (const key of dedupeKeys(keys)) {
    const foldedKey = key.toLowerCase();
    for (let start = 0; start + key.length <= text.length; start++) {
      const end = start + key.length;
      if (text.slice(start, end).toLowerCase() !== foldedKey) continue;
      const beforeOk = start === 0 || !isWordChar(text[start - 1]);
      const afterOk = end >= text.length || !isWordChar(text[end]);
      if (beforeOk && afterOk) {
        candidates.push({ key, start, end, surface: text.slice(start, end) });
      }
    }
  }
  return selectNonOverlapping(candidates);
}

function selectNonOverlapping(candidates: MatchSpan[]): MatchSpan[] {
  candidates.sort((a, b) =>
    (b.end - b.start) - (a.end - a.start) || a.start - b.start);
  const chosen: MatchSpan[] = [];
  for (const cand of candidates) {
    if (chosen.every((c) => cand.end <= c.start || cand.start >= c.end)) {
      chosen.push(cand);
    }
  }
  chosen.sort((a, b) => a.start - b.start);
  return chosen;
}
