/** Typed client for the analysis service; the only integration point. */

import type {
  AnalyzeResponse,
  HealthInfo,
  JobStatus,
  MappingResult,
  ReportEntry,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(`service error ${status}: ${JSON.stringify(detail)}`);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private token: string | null = null,
    private fetchFn: typeof fetch = fetch,
  ) {}

  private headers(json = true): Record<string, string> {
    const headers: Record<string, string> = {};
    if (json) headers["Content-Type"] = "application/json";
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    return headers;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const text = await response.text();
    const payload = text ? JSON.parse(text) : null;
    if (!response.ok) {
      throw new ApiError(response.status, payload?.detail ?? payload);
    }
    return payload as T;
  }

  health(): Promise<HealthInfo> {
    return this.request<HealthInfo>("/health", { headers: this.headers(false) });
  }

  analyze(body: string): Promise<AnalyzeResponse> {
    return this.request<AnalyzeResponse>("/analyze", {
      method: "POST",
      headers: this.headers(),
      body: JSON.stringify({ body }),
    });
  }

  analyzeBatch(content: string): Promise<JobStatus> {
    return this.request<JobStatus>("/analyze/batch", {
      method: "POST",
      headers: this.headers(false),
      body: content,
    });
  }

  batchStatus(jobId: string): Promise<JobStatus> {
    return this.request<JobStatus>(`/analyze/batch/${encodeURIComponent(jobId)}`, {
      headers: this.headers(false),
    });
  }

  getReport(reportId: string): Promise<ReportEntry> {
    return this.request<ReportEntry>(`/report/${encodeURIComponent(reportId)}`, {
      headers: this.headers(false),
    });
  }

  addNote(reportId: string, note: string, author: string): Promise<unknown> {
    return this.request(`/report/${encodeURIComponent(reportId)}/notes`, {
      method: "POST",
      headers: this.headers(),
      body: JSON.stringify({ note, author }),
    });
  }

  /** Raw bytes of the compiled report document. */
  async download(reportId: string): Promise<Blob> {
    const response = await this.fetchFn(
      `${this.baseUrl}/report/${encodeURIComponent(reportId)}/download`,
      { headers: this.headers(false) },
    );
    if (!response.ok) {
      throw new ApiError(response.status, await response.text());
    }
    return response.blob();
  }

  mapping(descriptor: string, article: string): Promise<MappingResult> {
    return this.request<MappingResult>("/mapping", {
      method: "POST",
      headers: this.headers(),
      body: JSON.stringify({ descriptor, article }),
    });
  }
}
