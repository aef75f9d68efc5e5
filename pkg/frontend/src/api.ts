import type {
  AgreementPayload,
  AnnotationRecord,
  Guideline,
  ItemEnvelope,
  ItemsPage,
  Sentiment,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, init);
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = (await res.json()) as { detail?: unknown };
      if (body.detail) detail = String(body.detail);
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

/** Thin typed client for the /api/v1 annotation service. */
export class ApiClient {
  constructor(readonly baseUrl: string = '') {}

  private url(path: string, params?: Record<string, string | number | undefined>): string {
    const query = Object.entries(params ?? {})
      .filter(([, v]) => v !== undefined)
      .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`)
      .join('&');
    return `${this.baseUrl}/api/v1${path}${query ? `?${query}` : ''}`;
  }

  listItems(opts: {
    status?: 'pending' | 'done';
    annotator?: string;
    page?: number;
    pageSize?: number;
  } = {}): Promise<ItemsPage> {
    return request<ItemsPage>(
      this.url('/items', {
        status: opts.status,
        annotator: opts.annotator,
        page: opts.page,
        page_size: opts.pageSize,
      }),
    );
  }

  getItem(itemId: number): Promise<ItemEnvelope> {
    return request<ItemEnvelope>(this.url(`/items/${itemId}`));
  }

  submitAnnotation(
    itemId: number,
    annotatorId: string,
    langTags: string[],
    sentiment: Sentiment,
  ): Promise<AnnotationRecord> {
    return request<AnnotationRecord>(this.url(`/items/${itemId}/annotations`), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({
        annotator_id: annotatorId,
        lang_tags: langTags,
        sentiment,
      }),
    });
  }

  agreement(a: string, b: string): Promise<AgreementPayload> {
    return request<AgreementPayload>(this.url('/agreement', { a, b }));
  }

  guidelines(): Promise<Guideline[]> {
    return request<{ guidelines: Guideline[] }>(this.url('/guidelines')).then(
      (body) => body.guidelines,
    );
  }
}
