import { beforeEach, describe, expect, it } from 'vitest';

import type { ApiClient } from '../src/api.js';
import { createWizardApp, type WizardApp } from '../src/app.js';
import { FakeClient, SAMPLE_RESPONSE } from './fakeClient.js';

function textContents(root: HTMLElement, selector: string): string[] {
  return [...root.querySelectorAll(selector)].map(
    (node) => node.textContent?.trim() ?? '');
}

async function appWith(client: FakeClient): Promise<{ app: WizardApp; root: HTMLElement }> {
  const root = document.createElement('div');
  document.body.appendChild(root);
  const app = createWizardApp(root, client as unknown as ApiClient);
  await app.ready;
  return { app, root };
}

async function searchedApp(client = new FakeClient()) {
  const { app, root } = await appWith(client);
  await app.submitQuery('ebola');
  await app.idle();
  return { app, root, client };
}

beforeEach(() => {
  document.body.innerHTML = '';
});

describe('search pane', () => {
  it('renders web results with title, url, description and chips', async () => {
    const { root } = await searchedApp();
    const first = root.querySelector('.web-result') as HTMLElement;
    expect(first.querySelector('.result-title')?.textContent)
      .toBe('Ebola encyclopedia article');
    expect(first.querySelector('.result-url')?.textContent)
      .toBe('https://en.example.org/wiki/Ebola');
    expect(first.querySelector('.result-description')?.textContent)
      .toContain('haemorrhagic');
    expect(textContents(first, '.chip-keyword'))
      .toEqual(['virus', 'supportive care']);
    expect(textContents(first, '.chip-entity'))
      .toEqual(['World Health Organization (WHO)']);
  });

  it('renders social links with frequency badge and post-text description', async () => {
    const { root } = await searchedApp();
    const link = root.querySelector('.social-link') as HTMLElement;
    expect(link.querySelector('.freq-badge')?.textContent).toBe('3×');
    expect(link.querySelector('.result-description')?.textContent)
      .toContain('Situation report');
  });

  it('replaces previous results on a new search', async () => {
    const { app, root } = await searchedApp();
    expect(root.querySelectorAll('.web-result')).toHaveLength(2);
    await app.submitQuery('ebola');
    await app.idle();
    expect(root.querySelectorAll('.web-result')).toHaveLength(2);
  });

  it('disables the search button for empty input', async () => {
    const { root } = await appWith(new FakeClient());
    const input = root.querySelector('.search-input') as HTMLInputElement;
    const button = root.querySelector('.search-button') as HTMLButtonElement;
    expect(button.disabled).toBe(true);
    input.value = 'ebola';
    input.dispatchEvent(new Event('input'));
    expect(button.disabled).toBe(false);
    input.value = '   ';
    input.dispatchEvent(new Event('input'));
    expect(button.disabled).toBe(true);
  });

  it('shows a warning strip when a source degraded', async () => {
    const { root } = await searchedApp(
      new FakeClient({ warnings: ["social connector 'social' unavailable: down"] }));
    const warnings = root.querySelector('.wizard-warnings') as HTMLElement;
    expect(warnings.hidden).toBe(false);
    expect(warnings.textContent).toContain('unavailable');
  });

  it('search failure shows a banner and leaves the spec panel alone', async () => {
    const client = new FakeClient();
    const { app, root } = await appWith(client);
    await app.submitQuery('ebola');
    await app.idle();
    // Seed something into the panel first.
    (root.querySelector('.toggle-seed') as HTMLButtonElement).click();
    await app.idle();
    const seedsBefore = textContents(root, '.spec-seeds .item-text');
    expect(seedsBefore).toHaveLength(1);

    client.search = () => Promise.reject(new Error('all connectors failed'));
    await app.submitQuery('ebola again');
    await app.idle();
    const banner = root.querySelector('.wizard-banner') as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain('search failed');
    expect(textContents(root, '.spec-seeds .item-text')).toEqual(seedsBefore);
  });

  it('a superseded search is cancelled and ignored', async () => {
    const hangingClient = new FakeClient({ searchNeverResolves: true });
    const { app, root } = await appWith(hangingClient);
    const firstSearch = app.submitQuery('slow query');

    hangingClient.options.searchNeverResolves = false;
    await app.submitQuery('ebola');
    await firstSearch;
    await app.idle();

    expect(hangingClient.searchCalls.map((c) => c.query))
      .toEqual(['slow query', 'ebola']);
    expect(root.querySelectorAll('.web-result')).toHaveLength(2);
    const banner = root.querySelector('.wizard-banner') as HTMLElement;
    expect(banner.hidden).toBe(true);
  });
});

describe('click to add and remove', () => {
  it('adding a seed posts one event with search provenance', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.toggle-seed') as HTMLButtonElement).click();
    await app.idle();
    expect(client.events).toHaveLength(1);
    expect(client.events[0]).toMatchObject({
      kind: 'SeedAdded',
      payload: { url: 'https://en.example.org/wiki/Ebola' },
      provenance: { source: 'search_result', query: 'ebola' },
    });
    expect(textContents(root, '.spec-seeds .item-text'))
      .toEqual(['https://en.example.org/wiki/Ebola']);
  });

  it('an added seed renders selected and clicking it again removes it', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.toggle-seed') as HTMLButtonElement).click();
    await app.idle();
    const button = root.querySelector('.toggle-seed') as HTMLButtonElement;
    expect(button.classList.contains('selected')).toBe(true);
    expect(button.textContent).toBe('remove seed');

    button.click();
    await app.idle();
    expect(client.events.map((e) => e.kind)).toEqual(['SeedAdded', 'SeedRemoved']);
    expect(textContents(root, '.spec-seeds .item-text')).toEqual([]);
  });

  it('keyword and entity chips post suggestion-provenance events', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.chip-keyword') as HTMLButtonElement).click();
    await app.idle();
    (root.querySelector('.chip-entity') as HTMLButtonElement).click();
    await app.idle();
    expect(client.events.map((e) => e.kind))
      .toEqual(['KeywordAdded', 'EntityAdded']);
    expect(client.events[0]?.payload).toMatchObject(
      { text: 'virus', origin: 'textrank' });
    expect(client.events[0]?.provenance)
      .toMatchObject({ source: 'suggestion', query: 'ebola' });
    expect(client.events[1]?.payload).toMatchObject(
      { label: 'World Health Organization', type: 'ORGANIZATION' });
    expect(textContents(root, '.spec-entities .item-text'))
      .toEqual(['World Health Organization']);
  });

  it('proposed hashtag chips add keywords with hashtag origin', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.proposed-tags .chip-keyword') as HTMLButtonElement).click();
    await app.idle();
    expect(client.events[0]?.payload).toMatchObject(
      { text: 'outbreak', origin: 'hashtag' });
  });

  it('a rejected add reverts the panel and shows a toast', async () => {
    const { app, root, client } = await searchedApp(
      new FakeClient({ failEvents: true }));
    (root.querySelector('.toggle-seed') as HTMLButtonElement).click();
    await app.idle();
    expect(client.events).toHaveLength(0);
    expect(textContents(root, '.spec-seeds .item-text')).toEqual([]);
    const toast = root.querySelector('.wizard-toast') as HTMLElement;
    expect(toast.hidden).toBe(false);
    expect(toast.textContent).toContain('upstream_unavailable');
  });

  it('panel remove buttons post removal events', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.toggle-seed') as HTMLButtonElement).click();
    await app.idle();
    (root.querySelector('.spec-seeds .remove-item') as HTMLButtonElement).click();
    await app.idle();
    expect(client.events.map((e) => e.kind)).toEqual(['SeedAdded', 'SeedRemoved']);
  });
});

describe('manual add and schedule', () => {
  it('manual seed with a bad URL shows an inline error and sends nothing', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.manual-value') as HTMLInputElement).value = 'not a url';
    (root.querySelector('.manual-add-button') as HTMLButtonElement).click();
    await app.idle();
    expect((root.querySelector('.manual-error') as HTMLElement).textContent)
      .toMatch(/absolute/);
    expect(client.events).toHaveLength(0);
  });

  it('manual seed happy path arrives with manual provenance', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.manual-value') as HTMLInputElement).value = 'http://who.int';
    (root.querySelector('.manual-add-button') as HTMLButtonElement).click();
    await app.idle();
    expect(client.events[0]).toMatchObject({
      kind: 'SeedAdded',
      provenance: { source: 'manual' },
    });
    expect(textContents(root, '.spec-seeds .item-text')).toEqual(['http://who.int']);
  });

  it('zero duration shows an inline error and sends nothing', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.schedule-start') as HTMLInputElement).value = '2015-02-01T10:00';
    (root.querySelector('.schedule-duration') as HTMLInputElement).value = '0';
    (root.querySelector('.schedule-button') as HTMLButtonElement).click();
    await app.idle();
    expect((root.querySelector('.schedule-error') as HTMLElement).textContent)
      .toMatch(/duration/);
    expect(client.spec.schedule).toBeNull();
  });

  it('valid schedule reaches the server and renders back', async () => {
    const { app, root, client } = await searchedApp();
    (root.querySelector('.schedule-start') as HTMLInputElement).value = '2015-02-01T10:00';
    (root.querySelector('.schedule-duration') as HTMLInputElement).value = '7';
    (root.querySelector('.schedule-button') as HTMLButtonElement).click();
    await app.idle();
    expect(client.spec.schedule?.duration_seconds).toBe(7 * 86400);
    expect((root.querySelector('.spec-schedule') as HTMLElement).textContent)
      .toContain('604800');
  });
});

describe('preview links', () => {
  it('titles open in a new browsing context without navigating the wizard', async () => {
    const { root } = await searchedApp();
    const anchor = root.querySelector('.web-result .result-title') as HTMLAnchorElement;
    expect(anchor.target).toBe('_blank');
    expect(anchor.rel).toContain('noopener');
  });

  it('social previews use the shared link URL, not a post permalink', async () => {
    const { root } = await searchedApp();
    const anchor = root.querySelector('.social-link .result-title') as HTMLAnchorElement;
    expect(anchor.href).toBe(SAMPLE_RESPONSE.social_links[0]?.url);
  });
});
