import { describe, expect, it } from 'vitest';

import { createMutationTracker } from '../src/optimistic.js';

function deferred<T>() {
  let resolve!: (value: T) => void;
  let reject!: (error: Error) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

describe('optimistic mutations', () => {
  it('applies locally, then reconciles with the server result', async () => {
    const tracker = createMutationTracker();
    let value = 'initial';
    await tracker.run({
      key: 'k',
      apply: () => {
        const snapshot = value;
        value = 'optimistic';
        return snapshot;
      },
      remote: () => Promise.resolve('confirmed'),
      reconcile: (result) => {
        value = result;
      },
      revert: (snapshot) => {
        value = snapshot;
      },
    });
    expect(value).toBe('confirmed');
  });

  it('reverts to the snapshot on failure and reports the error', async () => {
    const tracker = createMutationTracker();
    let value = 'initial';
    let reported: string | null = null;
    await tracker.run({
      key: 'k',
      apply: () => {
        const snapshot = value;
        value = 'optimistic';
        return snapshot;
      },
      remote: () => Promise.reject(new Error('502 from server')),
      reconcile: () => {
        value = 'confirmed';
      },
      revert: (snapshot) => {
        value = snapshot;
      },
      onError: (error) => {
        reported = error.message;
      },
    });
    expect(value).toBe('initial');
    expect(reported).toBe('502 from server');
  });

  it('ignores a second mutation for a key already in flight', async () => {
    const tracker = createMutationTracker();
    const gate = deferred<string>();
    let applied = 0;

    const first = tracker.run({
      key: 'item',
      apply: () => {
        applied += 1;
        return null;
      },
      remote: () => gate.promise,
      reconcile: () => {},
      revert: () => {},
    });
    expect(tracker.isPending('item')).toBe(true);

    await tracker.run({
      key: 'item',
      apply: () => {
        applied += 1;
        return null;
      },
      remote: () => Promise.resolve('never used'),
      reconcile: () => {},
      revert: () => {},
    });
    expect(applied).toBe(1);

    gate.resolve('done');
    await first;
    expect(tracker.isPending('item')).toBe(false);
  });

  it('tracks distinct keys independently', async () => {
    const tracker = createMutationTracker();
    const gate = deferred<string>();
    const first = tracker.run({
      key: 'a',
      apply: () => null,
      remote: () => gate.promise,
      reconcile: () => {},
      revert: () => {},
    });
    expect(tracker.isPending('a')).toBe(true);
    expect(tracker.isPending('b')).toBe(false);
    expect(tracker.pendingCount()).toBe(1);
    gate.resolve('x');
    await first;
    expect(tracker.pendingCount()).toBe(0);
  });
});
