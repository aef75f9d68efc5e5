import type { ApiClient } from './api.js';
import { cycleTag, isLangTag } from './tags.js';
import type { ItemEnvelope, LangTag, Sentiment } from './types.js';

export interface DraftAnnotation {
  itemId: number;
  tokens: string[];
  tags: LangTag[];
  sentiment: Sentiment;
  cursor: number;
}

/**
 * One annotator's pass over their pending queue. The draft for each item
 * starts from the system pre-annotation, so reviewing is mostly
 * correcting rather than tagging from scratch.
 */
export class ReviewFlow {
  private queue: ItemEnvelope[] = [];
  private index = 0;
  draft: DraftAnnotation | null = null;
  submitted = 0;

  constructor(
    private readonly api: ApiClient,
    readonly annotatorId: string,
  ) {}

  async loadQueue(): Promise<number> {
    const page = await this.api.listItems({
      status: 'pending',
      annotator: this.annotatorId,
      pageSize: 200,
    });
    this.queue = page.items;
    this.index = 0;
    this.submitted = 0;
    this.startDraft();
    return this.queue.length;
  }

  get remaining(): number {
    return this.queue.length - this.index;
  }

  get done(): boolean {
    return this.index >= this.queue.length;
  }

  private startDraft(): void {
    if (this.done) {
      this.draft = null;
      return;
    }
    const envelope = this.queue[this.index];
    const system = envelope.records.find((r) => r.source === 'system');
    const tags = envelope.item.tokens.map((_, i) => {
      const tag = system?.lang_tags[i];
      return tag && isLangTag(tag) ? tag : 'un';
    });
    this.draft = {
      itemId: envelope.item.item_id,
      tokens: [...envelope.item.tokens],
      tags,
      sentiment: (system ? clampSentiment(system.sentiment) : 0) as Sentiment,
      cursor: 0,
    };
  }

  cycleToken(i: number): void {
    if (!this.draft || i < 0 || i >= this.draft.tags.length) return;
    this.draft.tags[i] = cycleTag(this.draft.tags[i]);
    this.draft.cursor = i;
  }

  cycleAtCursor(): void {
    if (this.draft) this.cycleToken(this.draft.cursor);
  }

  moveCursor(delta: number): void {
    if (!this.draft) return;
    const n = this.draft.tokens.length;
    this.draft.cursor = Math.min(Math.max(this.draft.cursor + delta, 0), n - 1);
  }

  setSentiment(s: Sentiment): void {
    if (this.draft) this.draft.sentiment = s;
  }

  async submit(): Promise<void> {
    if (!this.draft) return;
    await this.api.submitAnnotation(
      this.draft.itemId,
      this.annotatorId,
      this.draft.tags,
      this.draft.sentiment,
    );
    this.submitted += 1;
    this.index += 1;
    this.startDraft();
  }

  skip(): void {
    if (this.done) return;
    this.index += 1;
    this.startDraft();
  }
}

function clampSentiment(s: number): Sentiment {
  return s > 0 ? 1 : s < 0 ? -1 : 0;
}
