import type { AgreementPayload } from './types.js';

/**
 * Agreement dashboard. The kappa values shown are exactly the server's
 * /agreement payload; nothing is recomputed on the client, so the
 * dashboard can never drift from the CLI's numbers.
 */
export function renderDashboard(root: HTMLElement, payload: AgreementPayload): void {
  root.innerHTML = '';

  const title = document.createElement('h2');
  title.textContent = 'Inter-annotator agreement';
  root.appendChild(title);

  const rows: Array<[string, string, string]> = [
    ['kappa-language', 'Language tags (token level)', formatKappa(payload.kappa_language)],
    ['kappa-sentiment', 'Sentiment labels', formatKappa(payload.kappa_sentiment)],
    ['n-items', 'Co-annotated items', String(payload.n_items)],
  ];

  const dl = document.createElement('dl');
  for (const [id, label, value] of rows) {
    const dt = document.createElement('dt');
    dt.textContent = label;
    const dd = document.createElement('dd');
    dd.dataset.testid = id;
    dd.textContent = value;
    dl.appendChild(dt);
    dl.appendChild(dd);
  }
  root.appendChild(dl);
}

export function formatKappa(value: number | null): string {
  return value === null ? 'n/a' : String(value);
}
