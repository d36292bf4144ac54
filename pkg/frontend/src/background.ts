/**
 * Service worker: routes badge updates from content scripts and opens the
 * dictionary search page when the toolbar icon is clicked.
 */

type BadgeMessage = { type: 'badge'; state: 'error' | 'ok' };

declare const chrome: {
  runtime: {
    onMessage: {
      addListener(
        fn: (message: BadgeMessage, sender: { tab?: { id?: number } }) => void,
      ): void;
    };
    getURL(path: string): string;
  };
  action: {
    setBadgeText(details: { text: string; tabId?: number }): void;
    setBadgeBackgroundColor(details: { color: string; tabId?: number }): void;
    onClicked: { addListener(fn: () => void): void };
  };
  tabs: { create(props: { url: string }): void };
};

chrome.runtime.onMessage.addListener((message, sender) => {
  if (message?.type !== 'badge') return;
  const tabId = sender.tab?.id;
  if (message.state === 'error') {
    chrome.action.setBadgeText({ text: '!', tabId });
    chrome.action.setBadgeBackgroundColor({ color: '#c0392b', tabId });
  } else {
    chrome.action.setBadgeText({ text: '', tabId });
  }
});

chrome.action.onClicked.addListener(() => {
  chrome.tabs.create({ url: chrome.runtime.getURL('search.html') });
});
