/** Wizard UI state: one store, subscribers re-render on every change. */

import type { CrawlSpec, SearchResponse } from './types.js';

export interface UiState {
  currentQuery: string;
  results: SearchResponse | null;
  spec: CrawlSpec | null;
  /** Degraded-source notices from the last search. */
  warnings: string[];
  /** Inline error banner for failed searches; spec panel stays intact. */
  banner: string | null;
  /** Short-lived message after a rejected mutation. */
  toast: string | null;
  searching: boolean;
}

export type Listener = (state: UiState) => void;

export interface Store {
  get(): UiState;
  set(partial: Partial<UiState>): void;
  subscribe(listener: Listener): () => void;
}

export function createStore(): Store {
  let state: UiState = {
    currentQuery: '',
    results: null,
    spec: null,
    warnings: [],
    banner: null,
    toast: null,
    searching: false,
  };
  const listeners = new Set<Listener>();

  return {
    get: () => state,
    set(partial) {
      state = { ...state, ...partial };
      for (const listener of listeners) listener(state);
    },
    subscribe(listener) {
      listeners.add(listener);
      return () => listeners.delete(listener);
    },
  };
}

/** Pure spec-list updates used for optimistic rendering before the server
 * confirms; the server response then replaces the whole spec. */

export function specWithSeed(spec: CrawlSpec, url: string): CrawlSpec {
  if (spec.seeds.includes(url)) return spec;
  return { ...spec, seeds: [...spec.seeds, url] };
}

export function specWithoutSeed(spec: CrawlSpec, url: string): CrawlSpec {
  return { ...spec, seeds: spec.seeds.filter((s) => s !== url) };
}

export function specWithKeyword(spec: CrawlSpec, text: string, origin: string): CrawlSpec {
  return { ...spec, keywords: [...spec.keywords, { text, origin }] };
}

export function specWithoutKeyword(spec: CrawlSpec, identity: string): CrawlSpec {
  return {
    ...spec,
    keywords: spec.keywords.filter(
      (k) => k.text.trim().replace(/\s+/g, ' ').toLowerCase() !== identity),
  };
}

export function specWithEntity(spec: CrawlSpec, label: string, type: string,
                               origin: string): CrawlSpec {
  if (spec.entities.some((e) => e.label === label)) return spec;
  return { ...spec, entities: [...spec.entities, { label, type, origin }] };
}

export function specWithoutEntity(spec: CrawlSpec, label: string): CrawlSpec {
  return { ...spec, entities: spec.entities.filter((e) => e.label !== label) };
}
