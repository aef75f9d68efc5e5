export interface ShortcutHandlers {
  sentimentNegative: () => void;
  sentimentNeutral: () => void;
  sentimentPositive: () => void;
  cycleTag: () => void;
  prevToken: () => void;
  nextToken: () => void;
  submit: () => void;
  skip: () => void;
}

const KEYMAP: Record<string, keyof ShortcutHandlers> = {
  '1': 'sentimentNegative',
  '2': 'sentimentNeutral',
  '3': 'sentimentPositive',
  ' ': 'cycleTag',
  arrowleft: 'prevToken',
  arrowright: 'nextToken',
  enter: 'submit',
  s: 'skip',
};

/** Returns a detach function. */
export function attachShortcuts(
  target: Pick<Window, 'addEventListener' | 'removeEventListener'>,
  handlers: ShortcutHandlers,
): () => void {
  const onKeyDown = (event: Event): void => {
    const e = event as KeyboardEvent;
    // Do not steal keys from text inputs.
    const el = e.target as HTMLElement | null;
    if (el && (el.tagName === 'INPUT' || el.tagName === 'TEXTAREA')) return;
    const action = KEYMAP[e.key.toLowerCase()];
    if (!action) return;
    e.preventDefault();
    handlers[action]();
  };
  target.addEventListener('keydown', onKeyDown);
  return () => target.removeEventListener('keydown', onKeyDown);
}
