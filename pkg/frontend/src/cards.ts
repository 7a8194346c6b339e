/** DOM builders for descriptor cards, the prediction badge, and highlights. */

import {
  barSegments,
  formatSimilarity,
  formatVotes,
  LEANING_COLORS,
} from "./format.js";
import { segmentBody, type HighlightRange } from "./highlight.js";
import type {
  AnalysisReport,
  DescriptorView,
  MatchSetView,
  PredictionView,
  SpanMappingView,
} from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function buildDistributionBar(matchSet: MatchSetView): HTMLElement {
  const segments = barSegments(matchSet.leaning_distribution);
  if (segments === null || matchSet.matches.length === 0) {
    return el("div", "distribution-bar empty-state", "no matched indicators");
  }
  const bar = el("div", "distribution-bar");
  for (const segment of segments) {
    const piece = el("span", `bar-segment leaning-${segment.leaning}`);
    piece.style.width = segment.width;
    piece.style.backgroundColor = LEANING_COLORS[segment.leaning];
    piece.dataset.leaning = segment.leaning;
    piece.dataset.basisPoints = String(segment.basisPoints);
    piece.title = `${segment.leaning}: ${segment.width}`;
    bar.appendChild(piece);
  }
  return bar;
}

export function buildIndicatorList(matchSet: MatchSetView): HTMLElement {
  const details = el("details", "indicator-list");
  details.appendChild(el("summary", undefined, `${matchSet.matches.length} matched indicator(s)`));
  const list = el("ol");
  const ordered = [...matchSet.matches].sort((a, b) => b.similarity - a.similarity);
  for (const match of ordered) {
    const item = el("li", "indicator-row");
    item.dataset.indicatorId = match.indicator_id;
    const sim = el("span", "similarity", formatSimilarity(match.similarity));
    const leaning = el("span", `leaning-tag leaning-${match.leaning}`, match.leaning);
    leaning.style.color = LEANING_COLORS[match.leaning];
    item.append(sim, leaning, el("span", "indicator-text", match.text));
    list.appendChild(item);
  }
  details.appendChild(list);
  return details;
}

export function buildDescriptorCard(
  descriptor: DescriptorView,
  matchSet: MatchSetView,
  mapping: SpanMappingView | undefined,
  onSelect: (descriptorId: string) => void,
): HTMLElement {
  const card = el("article", "descriptor-card");
  card.dataset.descriptorId = descriptor.id;
  const header = el("header");
  header.appendChild(el("span", "category-badge", descriptor.category));
  header.appendChild(el("p", "descriptor-text", descriptor.text));
  card.appendChild(header);
  card.appendChild(buildDistributionBar(matchSet));
  card.appendChild(buildIndicatorList(matchSet));
  if (mapping && mapping.spans.length === 0) {
    card.appendChild(el("p", "no-segment", "no matched segment in the article"));
  }
  card.addEventListener("click", () => onSelect(descriptor.id));
  return card;
}

export function buildPredictionBadge(prediction: PredictionView): HTMLElement {
  const badge = el("div", `prediction-badge leaning-${prediction.label}`);
  badge.style.borderColor = LEANING_COLORS[prediction.label];
  badge.appendChild(el("strong", undefined, prediction.label.toUpperCase()));
  badge.appendChild(el("span", "votes", formatVotes(prediction.vote_counts)));
  if (prediction.tie_broken) {
    badge.appendChild(el("span", "tie-note", "tie broken"));
  }
  return badge;
}

/** Ranges for the whole-report highlight view, one per located span. */
export function reportRanges(report: AnalysisReport): HighlightRange[] {
  const leaningByDescriptor = new Map(
    report.descriptors.map((d) => [d.id, d.leaning_as_generated]),
  );
  return report.mappings.flatMap((mapping) =>
    mapping.spans.map(([start, end]) => ({
      start,
      end,
      descriptorId: mapping.descriptor_id,
      leaning: leaningByDescriptor.get(mapping.descriptor_id) ?? "neutral",
    })),
  );
}

export function buildHighlightView(body: string, ranges: HighlightRange[]): HTMLElement {
  const container = el("div", "highlight-view");
  for (const segment of segmentBody(body, ranges)) {
    if (segment.range === undefined) {
      container.appendChild(document.createTextNode(segment.text));
    } else {
      const mark = el("mark", `highlight leaning-${segment.range.leaning}`, segment.text);
      mark.dataset.descriptorId = segment.range.descriptorId;
      mark.style.backgroundColor = `${LEANING_COLORS[segment.range.leaning]}55`;
      container.appendChild(mark);
    }
  }
  return container;
}

/** Flash the spans belonging to one descriptor and scroll the first into view. */
export function flashDescriptorSpans(root: ParentNode, descriptorId: string): number {
  const marks = root.querySelectorAll<HTMLElement>("mark.highlight");
  let flashed = 0;
  marks.forEach((mark) => {
    if (mark.dataset.descriptorId === descriptorId) {
      mark.classList.add("flash");
      if (flashed === 0 && typeof mark.scrollIntoView === "function") {
        mark.scrollIntoView({ block: "center", behavior: "smooth" });
      }
      flashed += 1;
    } else {
      mark.classList.remove("flash");
    }
  });
  return flashed;
}
