import { ApiClient } from './api.js';
import { renderDashboard } from './dashboard.js';
import { attachShortcuts } from './keyboard.js';
import { ReviewFlow } from './reviewFlow.js';
import type { Sentiment } from './types.js';

const SENTIMENT_LABELS: Array<[Sentiment, string]> = [
  [-1, 'negative'],
  [0, 'neutral'],
  [1, 'positive'],
];

/**
 * The whole single-page app: a review panel on the left, the agreement
 * dashboard below it. No framework; the DOM is re-rendered from the
 * flow state after every action.
 */
export class App {
  readonly api: ApiClient;
  flow: ReviewFlow;
  private detachKeys: (() => void) | null = null;

  constructor(
    private readonly root: HTMLElement,
    baseUrl: string,
    annotatorId: string,
  ) {
    this.api = new ApiClient(baseUrl);
    this.flow = new ReviewFlow(this.api, annotatorId);
  }

  async start(): Promise<void> {
    await this.flow.loadQueue();
    this.detachKeys?.();
    this.detachKeys = attachShortcuts(window, {
      sentimentNegative: () => this.setSentiment(-1),
      sentimentNeutral: () => this.setSentiment(0),
      sentimentPositive: () => this.setSentiment(1),
      cycleTag: () => {
        this.flow.cycleAtCursor();
        this.render();
      },
      prevToken: () => {
        this.flow.moveCursor(-1);
        this.render();
      },
      nextToken: () => {
        this.flow.moveCursor(1);
        this.render();
      },
      submit: () => void this.submit(),
      skip: () => {
        this.flow.skip();
        this.render();
      },
    });
    this.render();
  }

  setSentiment(s: Sentiment): void {
    this.flow.setSentiment(s);
    this.render();
  }

  async submit(): Promise<void> {
    await this.flow.submit();
    this.render();
  }

  async refreshDashboard(a: string, b: string): Promise<void> {
    const payload = await this.api.agreement(a, b);
    const section = this.ensureSection('dashboard');
    renderDashboard(section, payload);
  }

  private ensureSection(id: string): HTMLElement {
    let section = this.root.querySelector<HTMLElement>(`#${id}`);
    if (!section) {
      section = document.createElement('section');
      section.id = id;
      this.root.appendChild(section);
    }
    return section;
  }

  render(): void {
    const panel = this.ensureSection('review');
    panel.innerHTML = '';

    const status = document.createElement('p');
    status.dataset.testid = 'queue-status';
    status.textContent = this.flow.done
      ? `queue complete (${this.flow.submitted} submitted)`
      : `${this.flow.remaining} item(s) remaining`;
    panel.appendChild(status);

    const draft = this.flow.draft;
    if (!draft) return;

    const text = document.createElement('blockquote');
    text.dataset.testid = 'item-text';
    text.textContent = draft.tokens.join(' ');
    panel.appendChild(text);

    const tokenRow = document.createElement('div');
    tokenRow.dataset.testid = 'tokens';
    draft.tokens.forEach((token, i) => {
      const btn = document.createElement('button');
      btn.dataset.testid = `token-${i}`;
      btn.dataset.tag = draft.tags[i];
      btn.textContent = `${token}/${draft.tags[i]}`;
      btn.classList.toggle('cursor', i === draft.cursor);
      btn.addEventListener('click', () => {
        this.flow.cycleToken(i);
        this.render();
      });
      tokenRow.appendChild(btn);
    });
    panel.appendChild(tokenRow);

    const sentimentRow = document.createElement('div');
    for (const [value, label] of SENTIMENT_LABELS) {
      const btn = document.createElement('button');
      btn.dataset.testid = `sentiment-${label}`;
      btn.textContent = label;
      btn.classList.toggle('selected', draft.sentiment === value);
      btn.addEventListener('click', () => this.setSentiment(value));
      sentimentRow.appendChild(btn);
    }
    panel.appendChild(sentimentRow);

    const save = document.createElement('button');
    save.dataset.testid = 'save';
    save.textContent = 'Save & next';
    save.addEventListener('click', () => void this.submit());
    panel.appendChild(save);
  }
}
