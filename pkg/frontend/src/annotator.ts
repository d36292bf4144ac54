/**
 * Live-DOM tooltip injection with the same contract as the server-side
 * rewriter: text nodes only, excluded ancestors (links, code, existing
 * wrappers) are never entered, the page's visible text is preserved
 * exactly, and a second pass wraps nothing. Mutations are computed first
 * and applied in one batch to avoid reflow storms.
 */

import { findMatches } from './matching';
import type { MatchSpan, TermInfo } from './types';
import { DEFAULT_EXCLUDED_ANCESTORS } from './types';

export interface AnnotateOptions {
  excludedAncestors?: string[];
  annotateEveryOccurrence?: boolean;
}

export interface AnnotateResult {
  wrapped: number;
  perKey: Record<string, number>;
}

const TITLE_SEPARATOR = ' — ';

export function titleText(term: TermInfo): string {
  return `${term.expansion}${TITLE_SEPARATOR}${term.definition}`;
}

function collectTextNodes(root: Node, excluded: Set<string>): Text[] {
  const out: Text[] = [];
  const walk = (node: Node): void => {
    if (node.nodeType === 3 /* TEXT_NODE */) {
      out.push(node as Text);
      return;
    }
    if (node.nodeType === 1 /* ELEMENT_NODE */) {
      const tag = (node as Element).tagName.toLowerCase();
      if (excluded.has(tag)) return;
    }
    for (const child of Array.from(node.childNodes)) walk(child);
  };
  walk(root);
  return out;
}

export function annotatePage(
  root: Node,
  terms: TermInfo[],
  options: AnnotateOptions = {},
): AnnotateResult {
  const excluded = new Set([
    ...(options.excludedAncestors ?? DEFAULT_EXCLUDED_ANCESTORS),
    'dfn', 'abbr', // wrappers never nest
  ].map((t) => t.toLowerCase()));
  const everyOccurrence = options.annotateEveryOccurrence ?? true;

  const byKey = new Map(terms.map((t) => [t.key.toLowerCase(), t]));
  const keys = terms.map((t) => t.key);
  const doc = root.ownerDocument ?? (root as Document);

  const perKey: Record<string, number> = {};
  let wrapped = 0;

  // plan first, mutate second: one batched pass over the collected nodes
  const plans: Array<{ node: Text; spans: MatchSpan[] }> = [];
  for (const node of collectTextNodes(root, excluded)) {
    let spans = findMatches(node.data, keys);
    if (!everyOccurrence) {
      const seen = new Set<string>();
      spans = spans.filter((s) => {
        const folded = s.key.toLowerCase();
        if (perKey[s.key] !== undefined || seen.has(folded)) return false;
        seen.add(folded);
        return true;
      });
      for (const s of spans) perKey[s.key] = perKey[s.key] ?? 0;
    }
    if (spans.length > 0) plans.push({ node, spans });
  }

  for (const { node, spans } of plans) {
    const text = node.data;
    const fragment = doc.createDocumentFragment();
    let pos = 0;
    for (const span of spans) {
      if (span.start > pos) {
        fragment.appendChild(doc.createTextNode(text.slice(pos, span.start)));
      }
      const term = byKey.get(span.key.toLowerCase())!;
      const abbr = doc.createElement('abbr');
      abbr.setAttribute('title', titleText(term));
      abbr.appendChild(doc.createTextNode(span.surface));
      const dfn = doc.createElement('dfn');
      dfn.appendChild(abbr);
      fragment.appendChild(dfn);
      perKey[span.key] = (perKey[span.key] ?? 0) + 1;
      wrapped += 1;
      pos = span.end;
    }
    if (pos < text.length) {
      fragment.appendChild(doc.createTextNode(text.slice(pos)));
    }
    node.parentNode?.replaceChild(fragment, node);
  }

  for (const key of Object.keys(perKey)) {
    if (perKey[key] === 0) delete perKey[key];
  }
  return { wrapped, perKey };
}
