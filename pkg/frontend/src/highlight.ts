/** Split an article body into plain and highlighted segments. */

import type { Leaning } from "./types.js";

export interface HighlightRange {
  start: number;
  end: number;
  descriptorId: string;
  leaning: Leaning;
}

export interface BodySegment {
  text: string;
  /** Absent for unstyled (non-span) text. */
  range?: HighlightRange;
}

/**
 * Clamp ranges to the body, drop empty ones, and clip overlaps so the
 * resulting ranges are sorted and pairwise disjoint (first span wins the
 * contested prefix). Ranges from a single mapping are already disjoint;
 * overlap can only appear when several descriptors' spans are shown at once.
 */
export function normalizeRanges(ranges: HighlightRange[], bodyLength: number): HighlightRange[] {
  const sorted = ranges
    .map((range) => ({
      ...range,
      start: Math.max(0, Math.min(range.start, bodyLength)),
      end: Math.max(0, Math.min(range.end, bodyLength)),
    }))
    .filter((range) => range.start < range.end)
    .sort((a, b) => a.start - b.start || a.end - b.end);
  const disjoint: HighlightRange[] = [];
  let cursor = 0;
  for (const range of sorted) {
    const start = Math.max(range.start, cursor);
    if (start >= range.end) continue;
    disjoint.push({ ...range, start });
    cursor = range.end;
  }
  return disjoint;
}

/** Segment the body so that highlighted ranges map 1:1 onto styled segments. */
export function segmentBody(body: string, ranges: HighlightRange[]): BodySegment[] {
  const segments: BodySegment[] = [];
  let cursor = 0;
  for (const range of normalizeRanges(ranges, body.length)) {
    if (range.start > cursor) {
      segments.push({ text: body.slice(cursor, range.start) });
    }
    segments.push({ text: body.slice(range.start, range.end), range });
    cursor = range.end;
  }
  if (cursor < body.length) {
    segments.push({ text: body.slice(cursor) });
  }
  return segments;
}
