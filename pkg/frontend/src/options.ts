/** Options page: edit and persist the ExtensionConfig. */

import { loadConfig, saveConfig } from './config';
import { DEFAULT_CONFIG } from './types';

async function main(): Promise<void> {
  const urlInput = document.getElementById('service-url') as HTMLInputElement;
  const enabledInput = document.getElementById('enabled') as HTMLInputElement;
  const everyInput = document.getElementById('every-occurrence') as HTMLInputElement;
  const excludedInput = document.getElementById('excluded') as HTMLTextAreaElement;
  const status = document.getElementById('status') as HTMLElement;
  const form = document.getElementById('options-form') as HTMLFormElement;

  const config = await loadConfig();
  urlInput.value = config.serviceUrl;
  enabledInput.checked = config.enabled;
  everyInput.checked = config.annotateEveryOccurrence;
  excludedInput.value = config.excludedAncestors.join('\n');

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const excluded = excludedInput.value
      .split('\n').map((line) => line.trim().toLowerCase()).filter(Boolean);
    void saveConfig({
      serviceUrl: urlInput.value.trim() || DEFAULT_CONFIG.serviceUrl,
      enabled: enabledInput.checked,
      annotateEveryOccurrence: everyInput.checked,
      excludedAncestors: excluded.length ? excluded : DEFAULT_CONFIG.excludedAncestors,
    }).then(() => {
      status.textContent = 'Saved.';
      setTimeout(() => { status.textContent = ''; }, 1500);
    });
  });
}

if (typeof document !== 'undefined' && document.getElementById('options-form')) {
  void main();
}
