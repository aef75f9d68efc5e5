export type LangTag = 'bn' | 'en' | 'un';
export type Sentiment = -1 | 0 | 1;

export interface AnnotationRecord {
  item_id: number;
  annotator_id: string;
  lang_tags: string[];
  sentiment: number;
  created_at: string;
  source: 'system' | 'human';
}

export interface WorkItem {
  item_id: number;
  text: string;
  tokens: string[];
  status: 'pending' | 'done';
}

export interface ItemEnvelope {
  item: WorkItem;
  records: AnnotationRecord[];
}

export interface ItemsPage {
  total: number;
  page: number;
  page_size: number;
  items: ItemEnvelope[];
}

export interface AgreementPayload {
  kappa_language: number | null;
  kappa_sentiment: number | null;
  n_items: number;
}

export interface Guideline {
  id: string;
  category: 'language' | 'sentiment';
  tags: string[];
  text: string;
  example: string;
}
