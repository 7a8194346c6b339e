/** Wire types of the analysis service HTTP API (documented interface only). */

export type Leaning = "left" | "neutral" | "right";

export interface LeaningValues {
  left: number;
  neutral: number;
  right: number;
}

export interface ArticleView {
  id: string;
  body: string;
  gold_label: string | null;
}

export interface DescriptorView {
  id: string;
  category: string;
  text: string;
  leaning_as_generated: Leaning;
}

export interface MatchView {
  indicator_id: string;
  similarity: number;
  leaning: Leaning;
  text: string;
}

export interface MatchSetView {
  descriptor_id: string;
  matches: MatchView[];
  leaning_distribution: LeaningValues;
}

export interface PredictionView {
  label: Leaning;
  vote_counts: LeaningValues;
  similarity_mass: LeaningValues;
  tie_broken: boolean;
}

export interface SpanMappingView {
  descriptor_id: string;
  spans: [number, number][];
  unmatched_phrases: string[];
}

export interface NoteView {
  timestamp: string;
  author: string;
  note: string;
}

export interface AnalysisReport {
  report_id: string;
  created_at: string;
  article: ArticleView;
  descriptors: DescriptorView[];
  match_sets: MatchSetView[];
  prediction: PredictionView;
  mappings: SpanMappingView[];
  notes: NoteView[];
  no_descriptors: boolean;
}

export interface AnalyzeResponse {
  report_id: string;
  report: AnalysisReport;
}

export interface ReportEntry {
  report_id: string;
  status: "pending" | "complete" | "failed";
  report: AnalysisReport | null;
  error_detail: string | null;
}

export interface JobStatus {
  job_id: string;
  submitted_at: string;
  total: number;
  completed: number;
  report_ids: string[];
  reports: Record<string, string>;
}

export interface MappingResult {
  descriptor: string;
  spans: [number, number][];
  unmatched_phrases: string[];
}

export interface HealthInfo {
  status: string;
  store: {
    format_version: number;
    embedding_dimension: number;
    entry_count: number;
    embedding_model: string;
    build_params_digest: string;
    leaning_counts: LeaningValues;
  };
}
