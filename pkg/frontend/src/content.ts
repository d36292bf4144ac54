/**
 * Content script: when the page finishes loading, ask the service whether
 * the page is technology-related, fetch the key list, and wrap matches in
 * hover-tooltip markup. Everything is asynchronous and touches the DOM in
 * one batched pass; a disabled extension does nothing at all, and an
 * unreachable service leaves the page untouched and flags the toolbar
 * badge.
 */

import { annotatePage } from './annotator';
import { GlossaryApi, ServiceError } from './api';
import { loadConfig } from './config';
import { dedupeKeys, findMatches } from './matching';
import type { ExtensionConfig, TermInfo } from './types';

const CLASSIFY_TRUNCATE_CHARS = 5000;

type RuntimeLike = {
  runtime?: { sendMessage(message: unknown): void | Promise<unknown> };
};

declare const chrome: RuntimeLike | undefined;

function setBadge(state: 'error' | 'ok'): void {
  try {
    if (typeof chrome !== 'undefined' && chrome?.runtime?.sendMessage) {
      void chrome.runtime.sendMessage({ type: 'badge', state });
    }
  } catch {
    // no runtime (tests, detached frames): the badge is best-effort only
  }
}

export interface ContentResult {
  annotated: boolean;
  wrapped: number;
  reason: string;
}

export async function runContentScript(
  doc: Document,
  config: ExtensionConfig,
  api: GlossaryApi,
): Promise<ContentResult> {
  if (!config.enabled) {
    return { annotated: false, wrapped: 0, reason: 'disabled' };
  }
  const body = doc.body;
  if (!body) {
    return { annotated: false, wrapped: 0, reason: 'no-body' };
  }
  try {
    const pageText = body.textContent ?? '';
    const verdict = await api.classify(pageText.slice(0, CLASSIFY_TRUNCATE_CHARS));
    if (!verdict.is_tech) {
      return { annotated: false, wrapped: 0, reason: 'not-tech' };
    }
    const keys = await api.terms();
    const present = dedupeKeys(findMatches(pageText, keys).map((s) => s.key));
    const terms: TermInfo[] = [];
    for (const key of present) {
      const entry = await api.entry(key); // definitions fetched on demand
      terms.push({ key: entry.key, expansion: entry.expansion,
                   definition: entry.definition });
    }
    const result = annotatePage(body, terms, {
      excludedAncestors: config.excludedAncestors,
      annotateEveryOccurrence: config.annotateEveryOccurrence,
    });
    setBadge('ok');
    return { annotated: result.wrapped > 0, wrapped: result.wrapped, reason: 'ok' };
  } catch (err) {
    if (err instanceof ServiceError) {
      setBadge('error'); // silent no-op on the page itself
      return { annotated: false, wrapped: 0, reason: 'service-unreachable' };
    }
    throw err;
  }
}

async function main(): Promise<void> {
  const config = await loadConfig();
  if (!config.enabled) return; // zero requests, zero mutations
  const api = new GlossaryApi(config.serviceUrl);
  await runContentScript(document, config, api);
}

// auto-run only inside a real extension context
if (typeof chrome !== 'undefined' && chrome?.runtime) {
  if (document.readyState === 'complete' || document.readyState === 'interactive') {
    void main();
  } else {
    document.addEventListener('DOMContentLoaded', () => void main());
  }
}
