/**
 * Optimistic mutation helper.
 * Applies the change locally right away, runs the server call in the
 * background, reconciles with the server-confirmed result, reverts on
 * failure. At most one in-flight mutation per key.
 */

export interface OptimisticOptions<S, R> {
  /** Key identifying the mutation target (one in-flight change per key). */
  key: string;
  /** Apply the change locally; returns a snapshot used to revert. */
  apply: () => S;
  /** The actual server call. */
  remote: () => Promise<R>;
  /** Replace local state with the server-confirmed result. */
  reconcile: (result: R) => void;
  /** Undo the local change after a failure. */
  revert: (snapshot: S) => void;
  onError?: (error: Error) => void;
}

export interface MutationTracker {
  isPending(key: string): boolean;
  pendingCount(): number;
  /**
   * Run one optimistic mutation; the promise settles when the server call
   * finished (tests await it, UI handlers fire and forget). A second call
   * with a key already in flight is ignored.
   */
  run<S, R>(options: OptimisticOptions<S, R>): Promise<void>;
}

export function createMutationTracker(): MutationTracker {
  const pending = new Set<string>();

  return {
    isPending: (key) => pending.has(key),
    pendingCount: () => pending.size,

    async run(options) {
      if (pending.has(options.key)) return;
      pending.add(options.key);
      const snapshot = options.apply();
      try {
        const result = await options.remote();
        // Clear before reconciling so the state update renders the
        // target enabled again.
        pending.delete(options.key);
        options.reconcile(result);
      } catch (error) {
        pending.delete(options.key);
        options.revert(snapshot);
        options.onError?.(error as Error);
      } finally {
        pending.delete(options.key);
      }
    },
  };
}
