/**
 * Wizard application: search on top, web and social result columns with
 * clickable keyword/entity chips, the live spec panel on the right, crawl
 * parameters at the bottom.
 *
 * Every add or remove posts exactly one event; the panel optimistically
 * previews the change and is reconciled with the server's answer, so the
 * event log stays authoritative.
 */

import { ApiClient, ApiError } from './api.js';
import { createMutationTracker } from './optimistic.js';
import { render, SHELL_HTML } from './render.js';
import {
  createStore,
  specWithEntity,
  specWithKeyword,
  specWithoutEntity,
  specWithoutKeyword,
  specWithoutSeed,
  specWithSeed,
  type Store,
} from './state.js';
import type { CrawlSpec, EventBody, ProvenanceSource } from './types.js';
import {
  keywordIdentity,
  normalizeUrl,
  validateManualValue,
  validateSchedule,
} from './validate.js';

export interface WizardApp {
  readonly root: HTMLElement;
  readonly ready: Promise<void>;
  readonly store: Store;
  getSpecId(): string | null;
  submitQuery(text: string): Promise<void>;
  /** Resolves once no search or mutation is in flight. */
  idle(): Promise<void>;
}

export interface WizardOptions {
  specName?: string;
}

export function createWizardApp(root: HTMLElement, client: ApiClient,
                                options: WizardOptions = {}): WizardApp {
  root.innerHTML = SHELL_HTML;
  const store = createStore();
  const tracker = createMutationTracker();

  let inFlight = 0;
  let idleResolvers: Array<() => void> = [];
  const track = async <T>(work: Promise<T>): Promise<T> => {
    inFlight += 1;
    try {
      return await work;
    } finally {
      inFlight -= 1;
      if (inFlight === 0) {
        idleResolvers.forEach((resolve) => resolve());
        idleResolvers = [];
      }
    }
  };

  const searchInput = root.querySelector('.search-input') as HTMLInputElement;
  const searchButton = root.querySelector('.search-button') as HTMLButtonElement;
  const manualKind = root.querySelector('.manual-kind') as HTMLSelectElement;
  const manualValue = root.querySelector('.manual-value') as HTMLInputElement;
  const manualError = root.querySelector('.manual-error') as HTMLElement;
  const scheduleStart = root.querySelector('.schedule-start') as HTMLInputElement;
  const scheduleDuration = root.querySelector('.schedule-duration') as HTMLInputElement;
  const scheduleUnit = root.querySelector('.schedule-unit') as HTMLSelectElement;
  const scheduleError = root.querySelector('.schedule-error') as HTMLElement;

  store.subscribe((state) => render(root, state, tracker));

  const ready = track((async () => {
    const spec = await client.createSpec(options.specName ?? 'New crawl');
    store.set({ spec });
  })());

  // -- search -----------------------------------------------------------

  let searchController: AbortController | null = null;

  async function submitQuery(textValue: string): Promise<void> {
    const query = textValue.trim();
    if (!query) return;
    searchController?.abort();                   // supersede older search
    const controller = new AbortController();
    searchController = controller;
    store.set({ currentQuery: query, searching: true, banner: null });
    await track((async () => {
      try {
        const results = await client.search(query, getSpecId(), controller.signal);
        if (searchController !== controller) return;
        store.set({ results, warnings: results.warnings, searching: false });
      } catch (error) {
        if ((error as Error).name === 'AbortError') return;
        if (searchController === controller) {
          store.set({
            searching: false,
            banner: `search failed: ${(error as Error).message}`,
          });
        }
      }
    })());
  }

  // -- spec mutations ------------------------------------------------------

  function getSpecId(): string | null {
    return store.get().spec?.spec_id ?? null;
  }

  function provenance(source: ProvenanceSource): EventBody['provenance'] {
    return { source, query: store.get().currentQuery || null };
  }

  function postEvent(kind: string, payload: Record<string, unknown>,
                     source: ProvenanceSource): Promise<CrawlSpec> {
    const specId = getSpecId();
    if (!specId) return Promise.reject(new Error('no active spec'));
    return client.postEvent(specId, { kind, payload, provenance: provenance(source) });
  }

  function mutate(key: string, apply: (spec: CrawlSpec) => CrawlSpec,
                  remote: () => Promise<CrawlSpec>): Promise<void> {
    const current = store.get().spec;
    if (!current) return Promise.resolve();
    return track(tracker.run({
      key,
      apply: () => {
        store.set({ spec: apply(current), toast: null });
        return current;
      },
      remote,
      reconcile: (confirmed) => store.set({ spec: confirmed }),
      revert: (snapshot) => store.set({ spec: snapshot }),
      onError: (error) => {
        const message = error instanceof ApiError
          ? `${error.code}: ${error.message}` : error.message;
        store.set({ toast: `change rejected, ${message}` });
      },
    }));
  }

  function toggleSeed(url: string, source: ProvenanceSource): Promise<void> {
    const normalized = normalizeUrl(url);
    const present = store.get().spec?.seeds.includes(normalized) ?? false;
    return mutate(
      `seed:${normalized}`,
      (spec) => (present ? specWithoutSeed(spec, normalized)
                         : specWithSeed(spec, normalized)),
      () => postEvent(present ? 'SeedRemoved' : 'SeedAdded', { url }, source));
  }

  function toggleKeyword(textValue: string, origin: string,
                         source: ProvenanceSource): Promise<void> {
    const identity = keywordIdentity(textValue);
    const present = store.get().spec?.keywords.some(
      (k) => keywordIdentity(k.text) === identity) ?? false;
    return mutate(
      `keyword:${identity}`,
      (spec) => (present ? specWithoutKeyword(spec, identity)
                         : specWithKeyword(spec, textValue, origin)),
      () => postEvent(present ? 'KeywordRemoved' : 'KeywordAdded',
                      present ? { text: textValue } : { text: textValue, origin },
                      source));
  }

  function toggleEntity(label: string, type: string, origin: string,
                        source: ProvenanceSource): Promise<void> {
    const present = store.get().spec?.entities.some((e) => e.label === label) ?? false;
    return mutate(
      `entity:${label}`,
      (spec) => (present ? specWithoutEntity(spec, label)
                         : specWithEntity(spec, label, type, origin)),
      () => postEvent(present ? 'EntityRemoved' : 'EntityAdded',
                      present ? { label } : { label, type, origin },
                      source));
  }

  function removeByIdentity(kind: string, identity: string): Promise<void> {
    if (kind === 'seed') {
      return mutate(`seed:${identity}`,
                    (spec) => specWithoutSeed(spec, identity),
                    () => postEvent('SeedRemoved', { url: identity }, 'manual'));
    }
    if (kind === 'keyword') {
      return mutate(`keyword:${identity}`,
                    (spec) => specWithoutKeyword(spec, identity),
                    () => postEvent('KeywordRemoved', { text: identity }, 'manual'));
    }
    return mutate(`entity:${identity}`,
                  (spec) => specWithoutEntity(spec, identity),
                  () => postEvent('EntityRemoved', { label: identity }, 'manual'));
  }

  function manualAdd(): Promise<void> {
    const kind = manualKind.value as 'seed' | 'keyword' | 'entity';
    const value = manualValue.value;
    const problem = validateManualValue(kind, value);
    manualError.textContent = problem ?? '';
    if (problem) return Promise.resolve();       // nothing leaves the browser
    manualValue.value = '';
    const trimmed = value.trim();
    if (kind === 'seed') return toggleSeed(trimmed, 'manual');
    if (kind === 'keyword') return toggleKeyword(trimmed, 'manual', 'manual');
    return toggleEntity(trimmed, 'OTHER', 'manual', 'manual');
  }

  function setSchedule(): Promise<void> {
    const startValue = scheduleStart.value;
    const amount = Number(scheduleDuration.value);
    const unit = Number(scheduleUnit.value);
    const durationSeconds = Math.round(amount * unit);
    const problem = validateSchedule(startValue, durationSeconds);
    scheduleError.textContent = problem ?? '';
    if (problem) return Promise.resolve();
    const specId = getSpecId();
    if (!specId) return Promise.resolve();
    const startIso = new Date(startValue).toISOString();
    return track((async () => {
      try {
        const spec = await client.setSchedule(specId, startIso, durationSeconds);
        store.set({ spec, toast: null });
      } catch (error) {
        scheduleError.textContent = (error as Error).message;
      }
    })());
  }

  // -- event wiring ----------------------------------------------------------

  searchInput.addEventListener('input', () => {
    searchButton.disabled = !searchInput.value.trim() || store.get().searching;
  });
  searchInput.addEventListener('keydown', (event) => {
    if (event.key === 'Enter' && searchInput.value.trim()) {
      void submitQuery(searchInput.value);
    }
  });
  searchButton.addEventListener('click', () => void submitQuery(searchInput.value));
  (root.querySelector('.manual-add-button') as HTMLButtonElement)
    .addEventListener('click', () => void manualAdd());
  (root.querySelector('.schedule-button') as HTMLButtonElement)
    .addEventListener('click', () => void setSchedule());

  root.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const seedToggle = target.closest('.toggle-seed') as HTMLElement | null;
    if (seedToggle && !(seedToggle as HTMLButtonElement).disabled) {
      void toggleSeed(seedToggle.dataset.url ?? '',
                      (seedToggle.dataset.source ?? 'manual') as ProvenanceSource);
      return;
    }
    const keywordEl = target.closest('.chip-keyword') as HTMLElement | null;
    if (keywordEl && !(keywordEl as HTMLButtonElement).disabled) {
      void toggleKeyword(keywordEl.dataset.text ?? '',
                         keywordEl.dataset.origin ?? 'manual', 'suggestion');
      return;
    }
    const entityEl = target.closest('.chip-entity') as HTMLElement | null;
    if (entityEl && !(entityEl as HTMLButtonElement).disabled) {
      void toggleEntity(entityEl.dataset.label ?? '',
                        entityEl.dataset.type ?? 'OTHER',
                        entityEl.dataset.origin ?? 'manual', 'suggestion');
      return;
    }
    const removeEl = target.closest('.remove-item') as HTMLElement | null;
    if (removeEl && !(removeEl as HTMLButtonElement).disabled) {
      void removeByIdentity(removeEl.dataset.kind ?? '',
                            removeEl.dataset.identity ?? '');
    }
  });

  render(root, store.get(), tracker);

  return {
    root,
    ready,
    store,
    getSpecId,
    submitQuery,
    idle: () => (inFlight === 0
      ? Promise.resolve()
      : new Promise((resolve) => idleResolvers.push(resolve))),
  };
}
