export interface GlossaryEntry {
  key: string;
  expansion: string;
  definition: string;
  origin: string;
}

export interface MatchSpan {
  key: string;
  start: number;
  end: number;
  surface: string;
}

export interface TermInfo {
  key: string;
  expansion: string;
  definition: string;
}

export interface ClassifyVerdict {
  is_tech: boolean;
  decided_by: string;
}

export interface ExtensionConfig {
  serviceUrl: string;
  enabled: boolean;
  /** tags whose text is never annotated; mirrors the engine's policy */
  excludedAncestors: string[];
  annotateEveryOccurrence: boolean;
}

export const DEFAULT_EXCLUDED_ANCESTORS = [
  'a', 'script', 'style', 'abbr', 'dfn', 'code', 'pre',
  'textarea', 'input', 'button',
];

export const DEFAULT_CONFIG: ExtensionConfig = {
  serviceUrl: 'http://127.0.0.1:8756',
  enabled: true,
  excludedAncestors: DEFAULT_EXCLUDED_ANCESTORS,
  annotateEveryOccurrence: true,
};
