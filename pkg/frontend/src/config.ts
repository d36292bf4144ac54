/** ExtensionConfig persistence in extension storage, with an in-memory
 * fallback when the chrome APIs are absent (tests, plain pages). */

import type { ExtensionConfig } from './types';
import { DEFAULT_CONFIG } from './types';

const STORAGE_KEY = 'termtip-config';

type ChromeLike = {
  storage?: {
    sync?: {
      get(keys: string[]): Promise<Record<string, unknown>>;
      set(items: Record<string, unknown>): Promise<void>;
    };
  };
};

declare const chrome: ChromeLike | undefined;

let memoryFallback: ExtensionConfig = { ...DEFAULT_CONFIG };

function storageArea() {
  if (typeof chrome !== 'undefined' && chrome?.storage?.sync) {
    return chrome.storage.sync;
  }
  return null;
}

export async function loadConfig(): Promise<ExtensionConfig> {
  const area = storageArea();
  if (!area) return { ...memoryFallback };
  const items = await area.get([STORAGE_KEY]);
  const stored = items[STORAGE_KEY] as Partial<ExtensionConfig> | undefined;
  return { ...DEFAULT_CONFIG, ...(stored ?? {}) };
}

export async function saveConfig(config: ExtensionConfig): Promise<void> {
  const area = storageArea();
  if (!area) {
    memoryFallback = { ...config };
    return;
  }
  await area.set({ [STORAGE_KEY]: config });
}
