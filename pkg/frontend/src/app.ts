/** Page wiring: input, report view with notes/download, custom mapping. */

import { ApiClient, ApiError } from "./api.js";
import {
  buildDescriptorCard,
  buildHighlightView,
  buildPredictionBadge,
  flashDescriptorSpans,
  reportRanges,
} from "./cards.js";
import type { AnalysisReport, JobStatus } from "./types.js";

const POLL_INTERVAL_MS = 800;

export class App {
  private noteInFlight = false;

  constructor(
    private api: ApiClient,
    private root: Document | HTMLElement = document,
  ) {}

  private q<T extends HTMLElement>(selector: string): T {
    const node = this.root.querySelector<T>(selector);
    if (!node) throw new Error(`missing element ${selector}`);
    return node;
  }

  mount(): void {
    this.q<HTMLButtonElement>("#analyze-submit").addEventListener("click", () => {
      void this.submitSingle();
    });
    this.q<HTMLButtonElement>("#batch-submit").addEventListener("click", () => {
      void this.submitBatch();
    });
    this.q<HTMLButtonElement>("#mapping-submit").addEventListener("click", () => {
      void this.submitMapping();
    });
    this.q<HTMLButtonElement>("#note-submit").addEventListener("click", () => {
      void this.submitNote();
    });
    this.q<HTMLButtonElement>("#download-button").addEventListener("click", () => {
      void this.downloadReport();
    });
    for (const link of Array.from(this.root.querySelectorAll<HTMLElement>("[data-page-link]"))) {
      link.addEventListener("click", () => this.showPage(link.dataset.pageLink ?? "input"));
    }
  }

  showPage(name: string): void {
    for (const page of Array.from(this.root.querySelectorAll<HTMLElement>("[data-page]"))) {
      page.hidden = page.dataset.page !== name;
    }
  }

  private setError(selector: string, message: string | null): void {
    const banner = this.q<HTMLElement>(selector);
    banner.textContent = message ?? "";
    banner.hidden = message === null;
  }

  async submitSingle(): Promise<void> {
    const input = this.q<HTMLTextAreaElement>("#article-input");
    if (!input.value.trim()) {
      this.setError("#input-error", "Paste an article first.");
      return;
    }
    this.setError("#input-error", null);
    const button = this.q<HTMLButtonElement>("#analyze-submit");
    button.disabled = true;
    try {
      const response = await this.api.analyze(input.value);
      this.renderReport(response.report);
      this.showPage("report");
    } catch (error) {
      this.setError("#input-error", describe(error));
    } finally {
      button.disabled = false;
    }
  }

  async submitBatch(): Promise<void> {
    const file = this.q<HTMLInputElement>("#batch-file").files?.[0];
    if (!file) {
      this.setError("#input-error", "Choose a batch file first.");
      return;
    }
    this.setError("#input-error", null);
    try {
      const job = await this.api.analyzeBatch(await file.text());
      this.renderJob(job);
      await this.pollJob(job.job_id);
    } catch (error) {
      this.setError("#input-error", describe(error));
    }
  }

  private renderJob(job: JobStatus): void {
    const progress = this.q<HTMLElement>("#batch-progress");
    progress.hidden = false;
    progress.textContent = `job ${job.job_id}: ${job.completed}/${job.total}`;
    const list = this.q<HTMLElement>("#batch-reports");
    list.innerHTML = "";
    for (const reportId of job.report_ids) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.textContent = `${reportId} — ${job.reports[reportId]}`;
      link.href = "#";
      link.addEventListener("click", (event) => {
        event.preventDefault();
        void this.openReport(reportId);
      });
      item.appendChild(link);
      list.appendChild(item);
    }
  }

  private async pollJob(jobId: string): Promise<void> {
    const job = await this.api.batchStatus(jobId);
    this.renderJob(job);
    if (job.completed < job.total) {
      await sleep(POLL_INTERVAL_MS);
      return this.pollJob(jobId);
    }
  }

  async openReport(reportId: string): Promise<void> {
    const entry = await this.api.getReport(reportId);
    if (entry.status === "pending") {
      this.q<HTMLElement>("#report-status").textContent = "report still pending…";
      await sleep(POLL_INTERVAL_MS);
      return this.openReport(reportId);
    }
    if (entry.status === "failed" || entry.report === null) {
      this.setError("#input-error", `report ${reportId} failed: ${entry.error_detail ?? "unknown"}`);
      return;
    }
    this.renderReport(entry.report);
    this.showPage("report");
  }

  renderReport(report: AnalysisReport): void {
    this.q<HTMLElement>("#report-status").textContent = "";
    this.q<HTMLElement>("#report-id").textContent = report.report_id;
    const prediction = this.q<HTMLElement>("#prediction");
    prediction.innerHTML = "";
    prediction.appendChild(buildPredictionBadge(report.prediction));

    const highlightHost = this.q<HTMLElement>("#article-highlight");
    highlightHost.innerHTML = "";
    highlightHost.appendChild(buildHighlightView(report.article.body, reportRanges(report)));

    const cardsHost = this.q<HTMLElement>("#descriptor-cards");
    cardsHost.innerHTML = "";
    const matchSets = new Map(report.match_sets.map((ms) => [ms.descriptor_id, ms]));
    const mappings = new Map(report.mappings.map((m) => [m.descriptor_id, m]));
    for (const descriptor of report.descriptors) {
      const matchSet = matchSets.get(descriptor.id);
      if (!matchSet) continue;
      cardsHost.appendChild(
        buildDescriptorCard(descriptor, matchSet, mappings.get(descriptor.id), (id) => {
          flashDescriptorSpans(highlightHost, id);
        }),
      );
    }
    if (report.no_descriptors) {
      this.q<HTMLElement>("#report-status").textContent =
        "no descriptors were generated for this article";
    }
    this.renderNotes(report);
    this.q<HTMLElement>("#report-view").dataset.reportId = report.report_id;
  }

  private renderNotes(report: AnalysisReport): void {
    const list = this.q<HTMLElement>("#notes-list");
    list.innerHTML = "";
    for (const note of report.notes) {
      const item = document.createElement("li");
      item.textContent = `${note.author} (${note.timestamp}): ${note.note}`;
      list.appendChild(item);
    }
  }

  /** Append-only note submission; the button is a one-at-a-time gate. */
  async submitNote(): Promise<void> {
    if (this.noteInFlight) return;
    const reportId = this.q<HTMLElement>("#report-view").dataset.reportId;
    const noteInput = this.q<HTMLTextAreaElement>("#note-input");
    const author = this.q<HTMLInputElement>("#note-author").value.trim() || "anonymous";
    if (!reportId || !noteInput.value.trim()) return;
    const button = this.q<HTMLButtonElement>("#note-submit");
    this.noteInFlight = true;
    button.disabled = true;
    try {
      const updated = (await this.api.addNote(reportId, noteInput.value, author)) as AnalysisReport;
      noteInput.value = "";
      this.renderNotes(updated);
      this.setError("#note-error", null);
    } catch (error) {
      // Keep the draft so nothing the user typed is lost.
      this.setError("#note-error", describe(error));
    } finally {
      this.noteInFlight = false;
      button.disabled = false;
    }
  }

  async downloadReport(): Promise<void> {
    const reportId = this.q<HTMLElement>("#report-view").dataset.reportId;
    if (!reportId) return;
    const blob = await this.api.download(reportId);
    const url = URL.createObjectURL(blob);
    const link = document.createElement("a");
    link.href = url;
    link.download = `${reportId}.json`;
    link.click();
    URL.revokeObjectURL(url);
  }

  async submitMapping(): Promise<void> {
    const descriptor = this.q<HTMLTextAreaElement>("#mapping-descriptor").value;
    const article = this.q<HTMLTextAreaElement>("#mapping-article").value;
    if (!descriptor.trim() || !article.trim()) {
      this.setError("#mapping-error", "Both a descriptor and an article are required.");
      return;
    }
    this.setError("#mapping-error", null);
    try {
      const result = await this.api.mapping(descriptor, article);
      const host = this.q<HTMLElement>("#mapping-result");
      host.innerHTML = "";
      host.appendChild(
        buildHighlightView(
          article,
          result.spans.map(([start, end]) => ({
            start,
            end,
            descriptorId: "custom",
            leaning: "neutral",
          })),
        ),
      );
      const unmatched = this.q<HTMLElement>("#mapping-unmatched");
      unmatched.innerHTML = "";
      if (result.spans.length === 0) {
        this.setError("#mapping-error", "No segment of the article matches this descriptor.");
      }
      for (const phrase of result.unmatched_phrases) {
        const item = document.createElement("li");
        item.textContent = phrase;
        unmatched.appendChild(item);
      }
    } catch (error) {
      this.setError("#mapping-error", describe(error));
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return `service error ${error.status}: ${JSON.stringify(error.detail)}`;
  }
  return error instanceof Error ? error.message : String(error);
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
