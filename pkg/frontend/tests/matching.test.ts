import { describe, expect, it } from 'vitest';

import { dedupeKeys, findMatches, isWordChar } from '../src/matching';
import matchingContract from './fixtures/matching_contract.json';

interface ContractCase {
  text: string;
  keys: string[];
  spans: Array<{ key: string; start: number; end: number; surface: string }>;
}

describe('findMatches', () => {
  it('matches every engine-generated contract case exactly', () => {
    for (const item of matchingContract as ContractCase[]) {
      const actual = findMatches(item.text, item.keys);
      expect(actual, JSON.stringify({ text: item.text, keys: item.keys }))
        .toEqual(item.spans);
    }
  });

  it('finds a simple whole-word occurrence', () => {
    expect(findMatches('The CPU is fast', ['CPU'])).toEqual([
      { key: 'CPU', start: 4, end: 7, surface: 'CPU' },
    ]);
  });

  it('rejects embedded occurrences and accepts other casings', () => {
    const spans = findMatches('SCPUs and cpu', ['CPU']);
    expect(spans).toHaveLength(1);
    expect(spans[0].surface).toBe('cpu');
    expect(spans[0].start).toBe(10);
  });

  it('prefers the longest overlapping match', () => {
    const spans = findMatches('over TCP/IP links', ['TCP/IP', 'IP']);
    expect(spans.map((s) => s.key)).toEqual(['TCP/IP']);
  });

  it('treats underscore as a word character', () => {
    expect(findMatches('CPU_COUNT', ['CPU'])).toEqual([]);
  });

  it('returns spans sorted and non-overlapping', () => {
    const spans = findMatches('API CPU API', ['API', 'CPU']);
    for (let i = 1; i < spans.length; i++) {
      expect(spans[i - 1].end).toBeLessThanOrEqual(spans[i].start);
    }
  });
});

describe('helpers', () => {
  it('isWordChar covers letters, digits, underscore', () => {
    for (const ch of ['a', 'Z', '0', '_', 'é']) expect(isWordChar(ch)).toBe(true);
    for (const ch of [' ', '-', '.', '+', ' ']) expect(isWordChar(ch)).toBe(false);
  });

  it('dedupeKeys keeps first-seen casing', () => {
    expect(dedupeKeys(['CPU', 'cpu', 'Gpu', 'GPU', ''])).toEqual(['CPU', 'Gpu']);
  });
});
