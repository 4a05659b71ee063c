/** Thin typed client over the wizard service endpoints. */

import type {
  ApiErrorBody,
  CrawlDescription,
  CrawlSpec,
  EventBody,
  SearchResponse,
} from './types.js';

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly detail: unknown;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message || `request failed with ${status}`);
    this.code = body.code || 'internal';
    this.status = status;
    this.detail = body.detail;
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = '', fetchFn: FetchLike = fetch) {
    this.base = baseUrl.replace(/\/$/, '');
    this.fetchFn = fetchFn;
  }

  private async request<T>(method: string, path: string, body?: unknown,
                           signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`, {
      method,
      headers: body === undefined ? {} : { 'content-type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
      signal: signal ?? null,
    });
    const text = await response.text();
    const data = text ? JSON.parse(text) : null;
    if (!response.ok) {
      throw new ApiError(response.status, (data ?? {}) as ApiErrorBody);
    }
    return data as T;
  }

  search(query: string, specId: string | null, signal?: AbortSignal): Promise<SearchResponse> {
    const body: Record<string, unknown> = { query };
    if (specId) body.spec_id = specId;
    return this.request<SearchResponse>('POST', '/api/search', body, signal);
  }

  createSpec(name: string): Promise<CrawlSpec> {
    return this.request<CrawlSpec>('POST', '/api/specs', { name });
  }

  getSpec(specId: string): Promise<CrawlSpec> {
    return this.request<CrawlSpec>('GET', `/api/specs/${specId}`);
  }

  postEvent(specId: string, event: EventBody): Promise<CrawlSpec> {
    return this.request<CrawlSpec>('POST', `/api/specs/${specId}/events`, event);
  }

  setSchedule(specId: string, start: string, durationSeconds: number): Promise<CrawlSpec> {
    return this.request<CrawlSpec>('PUT', `/api/specs/${specId}/schedule`, {
      start,
      duration_seconds: durationSeconds,
    });
  }

  getDescription(specId: string): Promise<CrawlDescription> {
    return this.request<CrawlDescription>('GET', `/api/specs/${specId}/description`);
  }
}
