/**
 * Client-side validation mirroring the server rules, so obviously bad
 * input never leaves the browser.
 */

export function isAbsoluteHttpUrl(value: string): boolean {
  let parsed: URL;
  try {
    parsed = new URL(value);
  } catch {
    return false;
  }
  return (parsed.protocol === 'http:' || parsed.protocol === 'https:') && !!parsed.host;
}

/**
 * Mirror of the server's URL normalization: lowercase scheme and host,
 * drop the fragment, drop a bare trailing slash. Used only for comparing
 * result URLs against spec seeds when rendering selection state.
 */
export function normalizeUrl(value: string): string {
  if (!isAbsoluteHttpUrl(value)) return value;
  const parsed = new URL(value);
  parsed.hash = '';
  let path = parsed.pathname === '/' ? '' : parsed.pathname;
  const port = parsed.port ? `:${parsed.port}` : '';
  const query = parsed.search;
  return `${parsed.protocol.toLowerCase()}//${parsed.hostname.toLowerCase()}${port}${path}${query}`;
}

export function keywordIdentity(text: string): string {
  return text.trim().replace(/\s+/g, ' ').toLowerCase();
}

export function validateManualValue(kind: 'seed' | 'keyword' | 'entity',
                                    value: string): string | null {
  const trimmed = value.trim();
  if (!trimmed) return 'value must not be empty';
  if (kind === 'seed' && !isAbsoluteHttpUrl(trimmed)) {
    return 'seed must be an absolute http(s) URL';
  }
  return null;
}

export function validateSchedule(start: string, durationSeconds: number): string | null {
  if (!start || Number.isNaN(Date.parse(start))) {
    return 'start must be a valid date/time';
  }
  if (!Number.isInteger(durationSeconds) || durationSeconds <= 0) {
    return 'duration must be a positive whole number of seconds';
  }
  return null;
}
