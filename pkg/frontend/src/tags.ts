import type { LangTag } from './types.js';

export const TAG_CYCLE: readonly LangTag[] = ['bn', 'en', 'un'];

/** Clicking a token advances its tag bn -> en -> un -> bn. */
export function cycleTag(tag: LangTag): LangTag {
  const i = TAG_CYCLE.indexOf(tag);
  return TAG_CYCLE[(i + 1) % TAG_CYCLE.length];
}

export function isLangTag(value: string): value is LangTag {
  return (TAG_CYCLE as readonly string[]).includes(value);
}
