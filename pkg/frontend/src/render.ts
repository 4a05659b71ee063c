/**
 * DOM rendering. The dynamic regions are rebuilt from state on every
 * change; the spec panel in particular is a pure render of the last
 * server-confirmed specification plus any optimistic overlay.
 */

import type { MutationTracker } from './optimistic.js';
import type { UiState } from './state.js';
import type { CrawlSpec, EntityInfo, Keyword, SocialLinkItem, WebResultItem } from './types.js';
import { keywordIdentity, normalizeUrl } from './validate.js';

export const SHELL_HTML = `
<div class="wizard">
  <header class="wizard-search">
    <input class="search-input" type="text" placeholder="Enter keywords, e.g. ebola" aria-label="Search query">
    <button class="search-button" disabled>Search</button>
  </header>
  <div class="wizard-banner" hidden></div>
  <div class="wizard-warnings" hidden></div>
  <div class="wizard-main">
    <section class="results-pane results-web">
      <h2>Web results</h2>
      <ol class="web-list"></ol>
    </section>
    <section class="results-pane results-social">
      <h2>Social media</h2>
      <div class="proposed-tags"></div>
      <ol class="social-list"></ol>
    </section>
    <aside class="spec-panel">
      <h2 class="spec-name"></h2>
      <h3>Seed URLs</h3>
      <ul class="spec-seeds"></ul>
      <h3>Keywords</h3>
      <ul class="spec-keywords"></ul>
      <h3>Entities</h3>
      <ul class="spec-entities"></ul>
      <h3>Schedule</h3>
      <div class="spec-schedule">not set</div>
      <div class="manual-add">
        <h3>Add manually</h3>
        <select class="manual-kind" aria-label="Item kind">
          <option value="seed">seed URL</option>
          <option value="keyword">keyword</option>
          <option value="entity">entity</option>
        </select>
        <input class="manual-value" type="text" aria-label="Item value">
        <button class="manual-add-button">Add</button>
        <div class="manual-error field-error"></div>
      </div>
    </aside>
  </div>
  <footer class="wizard-params">
    <h3>Crawl parameters</h3>
    <label>Start
      <input class="schedule-start" type="datetime-local" step="1">
    </label>
    <label>Duration
      <input class="schedule-duration" type="number" min="1" value="7">
    </label>
    <select class="schedule-unit" aria-label="Duration unit">
      <option value="86400">days</option>
      <option value="3600">hours</option>
    </select>
    <button class="schedule-button">Set schedule</button>
    <span class="schedule-error field-error"></span>
  </footer>
  <div class="wizard-toast" hidden></div>
</div>
`;

function el(html: string): HTMLElement {
  const template = document.createElement('template');
  template.innerHTML = html.trim();
  return template.content.firstElementChild as HTMLElement;
}

function text(value: string): string {
  const div = document.createElement('div');
  div.textContent = value;
  return div.innerHTML;
}

function attr(value: string): string {
  return text(value).replace(/"/g, '&quot;');
}

export interface SpecLookup {
  hasSeed(url: string): boolean;
  hasKeyword(text: string): boolean;
  hasEntity(label: string): boolean;
}

export function specLookup(spec: CrawlSpec | null): SpecLookup {
  const seeds = new Set(spec?.seeds ?? []);
  const keywords = new Set((spec?.keywords ?? []).map((k) => keywordIdentity(k.text)));
  const entities = new Set((spec?.entities ?? []).map((e) => e.label));
  return {
    hasSeed: (url) => seeds.has(normalizeUrl(url)),
    hasKeyword: (t) => keywords.has(keywordIdentity(t)),
    hasEntity: (label) => entities.has(label),
  };
}

function seedButton(url: string, source: 'search_result' | 'social_link',
                    lookup: SpecLookup, tracker: MutationTracker): string {
  const selected = lookup.hasSeed(url);
  const busy = tracker.isPending(`seed:${normalizeUrl(url)}`);
  return `<button class="toggle-seed${selected ? ' selected' : ''}"
    data-url="${attr(url)}" data-source="${source}"
    ${busy ? 'disabled' : ''}>${selected ? 'remove seed' : 'add seed'}</button>`;
}

function keywordChip(keyword: Keyword, lookup: SpecLookup,
                     tracker: MutationTracker): string {
  const selected = lookup.hasKeyword(keyword.text);
  const busy = tracker.isPending(`keyword:${keywordIdentity(keyword.text)}`);
  return `<button class="chip chip-keyword${selected ? ' selected' : ''}"
    data-text="${attr(keyword.text)}" data-origin="${attr(keyword.origin)}"
    ${busy ? 'disabled' : ''}>${text(keyword.text)}</button>`;
}

function entityChip(entity: EntityInfo, lookup: SpecLookup,
                    tracker: MutationTracker): string {
  const selected = lookup.hasEntity(entity.label);
  const busy = tracker.isPending(`entity:${entity.label}`);
  const shown = entity.alias ? `${entity.label} (${entity.alias})` : entity.label;
  return `<button class="chip chip-entity${selected ? ' selected' : ''}"
    data-label="${attr(entity.label)}" data-type="${attr(entity.type)}"
    data-origin="${attr(entity.origin)}"
    ${busy ? 'disabled' : ''}>${text(shown)}</button>`;
}

function webResultItem(result: WebResultItem, lookup: SpecLookup,
                       tracker: MutationTracker): HTMLElement {
  const keywords = result.keywords.map((k) => keywordChip(k, lookup, tracker)).join('');
  const entities = result.entities.map((e) => entityChip(e, lookup, tracker)).join('');
  const note = result.analysis_status === 'ok'
    ? ''
    : `<span class="analysis-note">no page analysis (${result.analysis_status})</span>`;
  return el(`<li class="web-result" data-url="${attr(result.url)}">
    <div class="result-head">
      <a class="result-title" href="${attr(result.url)}" target="_blank"
         rel="noopener noreferrer">${text(result.title || result.url)}</a>
      ${seedButton(result.url, 'search_result', lookup, tracker)}
    </div>
    <div class="result-url">${text(result.url)}</div>
    <p class="result-description">${text(result.description)}</p>
    ${keywords ? `<div class="chip-row"><span class="chip-row-label">keywords</span>${keywords}</div>` : ''}
    ${entities ? `<div class="chip-row"><span class="chip-row-label">entities</span>${entities}</div>` : ''}
    ${note}
  </li>`);
}

function socialLinkItem(link: SocialLinkItem, lookup: SpecLookup,
                        tracker: MutationTracker): HTMLElement {
  return el(`<li class="social-link" data-url="${attr(link.url)}">
    <div class="result-head">
      <a class="result-title" href="${attr(link.url)}" target="_blank"
         rel="noopener noreferrer">${text(link.url)}</a>
      <span class="freq-badge" title="shared by ${link.frequency} posts">${link.frequency}&times;</span>
      ${seedButton(link.url, 'social_link', lookup, tracker)}
    </div>
    <p class="result-description">${text(link.description)}</p>
  </li>`);
}

function specListItem(kind: string, identity: string, display: string,
                      tracker: MutationTracker, origin?: string): HTMLElement {
  const busy = tracker.isPending(`${kind}:${identity}`);
  return el(`<li class="spec-item" data-kind="${attr(kind)}" data-identity="${attr(identity)}">
    <span class="item-text">${text(display)}</span>
    ${origin ? `<span class="origin-badge">${text(origin)}</span>` : ''}
    <button class="remove-item" data-kind="${attr(kind)}"
      data-identity="${attr(identity)}" ${busy ? 'disabled' : ''}
      aria-label="remove">&#10005;</button>
  </li>`);
}

export function render(root: HTMLElement, state: UiState, tracker: MutationTracker): void {
  const lookup = specLookup(state.spec);
  const query = (root.querySelector('.search-input') as HTMLInputElement).value;
  (root.querySelector('.search-button') as HTMLButtonElement).disabled =
    !query.trim() || state.searching;

  const banner = root.querySelector('.wizard-banner') as HTMLElement;
  banner.hidden = !state.banner;
  banner.textContent = state.banner ?? '';

  const warnings = root.querySelector('.wizard-warnings') as HTMLElement;
  warnings.hidden = state.warnings.length === 0;
  warnings.textContent = state.warnings.join(' ');

  const toast = root.querySelector('.wizard-toast') as HTMLElement;
  toast.hidden = !state.toast;
  toast.textContent = state.toast ?? '';

  const webList = root.querySelector('.web-list') as HTMLElement;
  webList.replaceChildren(
    ...(state.results?.web ?? []).map((r) => webResultItem(r, lookup, tracker)));

  const socialList = root.querySelector('.social-list') as HTMLElement;
  socialList.replaceChildren(
    ...(state.results?.social_links ?? []).map((l) => socialLinkItem(l, lookup, tracker)));

  const tags = root.querySelector('.proposed-tags') as HTMLElement;
  tags.innerHTML = (state.results?.proposed_keywords ?? [])
    .map(({ tag, frequency }) => keywordChip(
      { text: tag, score: frequency, origin: 'hashtag' }, lookup, tracker))
    .join('');

  const spec = state.spec;
  (root.querySelector('.spec-name') as HTMLElement).textContent =
    spec ? spec.name : 'no specification';

  (root.querySelector('.spec-seeds') as HTMLElement).replaceChildren(
    ...(spec?.seeds ?? []).map((url) => specListItem('seed', url, url, tracker)));
  (root.querySelector('.spec-keywords') as HTMLElement).replaceChildren(
    ...(spec?.keywords ?? []).map((k) =>
      specListItem('keyword', keywordIdentity(k.text), k.text, tracker, k.origin)));
  (root.querySelector('.spec-entities') as HTMLElement).replaceChildren(
    ...(spec?.entities ?? []).map((e) =>
      specListItem('entity', e.label, e.label, tracker, e.origin)));

  const scheduleBox = root.querySelector('.spec-schedule') as HTMLElement;
  scheduleBox.textContent = spec?.schedule
    ? `${spec.schedule.start} for ${spec.schedule.duration_seconds}s`
    : 'not set';
}
