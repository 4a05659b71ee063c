/** Wire types for the wizard service API. */

export interface Keyword {
  text: string;
  score: number;
  origin: 'textrank' | 'hashtag' | 'manual';
}

export interface EntityInfo {
  surface: string;
  label: string;
  type: 'PERSON' | 'ORGANIZATION' | 'LOCATION' | 'OTHER';
  origin: 'extracted' | 'manual';
  alias: string | null;
}

export interface WebResultItem {
  url: string;
  title: string;
  description: string;
  rank: number;
  source: string;
  keywords: Keyword[];
  entities: EntityInfo[];
  analysis_status: 'ok' | 'fetch_failed' | 'skipped';
}

export interface SocialLinkItem {
  url: string;
  frequency: number;
  description: string;
  supporting_post_ids: string[];
}

export interface SearchResponse {
  query: { text: string; max_web_results: number; max_posts: number };
  web: WebResultItem[];
  social_links: SocialLinkItem[];
  proposed_keywords: Array<{ tag: string; frequency: number }>;
  warnings: string[];
}

export interface SpecKeyword {
  text: string;
  origin: string;
}

export interface SpecEntity {
  label: string;
  type: string;
  origin: string;
}

export interface CrawlSpec {
  spec_id: string;
  name: string;
  seeds: string[];
  keywords: SpecKeyword[];
  entities: SpecEntity[];
  schedule: { start: string; duration_seconds: number } | null;
  version: number;
}

export interface CrawlDescription {
  spec: CrawlSpec;
  queries: Array<{ query: string; at: string; event_id: number }>;
  item_provenance: Array<{
    item_kind: string;
    identity: string;
    event_id: number;
    at: string;
    source: string;
    query: string | null;
  }>;
  removed_items: Array<{ item_kind: string; identity: string; event_id: number; at: string }>;
}

export type ProvenanceSource = 'search_result' | 'social_link' | 'suggestion' | 'manual';

export interface EventBody {
  kind: string;
  payload: Record<string, unknown>;
  provenance: { source: ProvenanceSource; query: string | null };
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: unknown;
}
