import { describe, expect, it } from 'vitest';

import { cycleTag, isLangTag, TAG_CYCLE } from '../src/tags.js';

describe('tag cycling', () => {
  it('advances bn -> en -> un -> bn', () => {
    expect(cycleTag('bn')).toBe('en');
    expect(cycleTag('en')).toBe('un');
    expect(cycleTag('un')).toBe('bn');
  });

  it('is a full cycle over every tag', () => {
    for (const tag of TAG_CYCLE) {
      let current = tag;
      for (let i = 0; i < TAG_CYCLE.length; i++) current = cycleTag(current);
      expect(current).toBe(tag);
    }
  });

  it('recognizes only the three valid tags', () => {
    expect(isLangTag('bn')).toBe(true);
    expect(isLangTag('en')).toBe(true);
    expect(isLangTag('un')).toBe(true);
    expect(isLangTag('xx')).toBe(false);
    expect(isLangTag('')).toBe(false);
  });
});
