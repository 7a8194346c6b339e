import { describe, expect, it } from "vitest";

import { normalizeRanges, segmentBody, type HighlightRange } from "../src/highlight.js";

const range = (start: number, end: number, id = "d0"): HighlightRange => ({
  start,
  end,
  descriptorId: id,
  leaning: "left",
});

describe("normalizeRanges", () => {
  it("clamps out-of-bounds ranges to the body", () => {
    const out = normalizeRanges([range(-5, 4), range(8, 99)], 10);
    expect(out.map((r) => [r.start, r.end])).toEqual([
      [0, 4],
      [8, 10],
    ]);
  });

  it("drops empty ranges and clips overlaps deterministically", () => {
    const out = normalizeRanges([range(2, 2), range(0, 6, "a"), range(4, 9, "b")], 20);
    expect(out.map((r) => [r.start, r.end, r.descriptorId])).toEqual([
      [0, 6, "a"],
      [6, 9, "b"],
    ]);
  });
});

describe("segmentBody", () => {
  const body = "alpha beta gamma delta";

  it("maps ranges 1:1 onto styled segments and keeps the rest unstyled", () => {
    const segments = segmentBody(body, [range(6, 10), range(17, 22, "d1")]);
    expect(segments.map((s) => s.text).join("")).toBe(body);
    const styled = segments.filter((s) => s.range);
    expect(styled.map((s) => s.text)).toEqual(["beta", "delta"]);
    expect(styled.map((s) => s.range!.descriptorId)).toEqual(["d0", "d1"]);
    const plain = segments.filter((s) => !s.range).map((s) => s.text);
    expect(plain).toEqual(["alpha ", " gamma "]);
  });

  it("covers the whole body with no ranges", () => {
    expect(segmentBody(body, [])).toEqual([{ text: body }]);
  });

  it("handles a range covering the entire body", () => {
    const segments = segmentBody(body, [range(0, body.length)]);
    expect(segments).toHaveLength(1);
    expect(segments[0].range).toBeDefined();
  });

  it("reassembly is lossless for arbitrary range soups", () => {
    const soups: HighlightRange[][] = [
      [range(1, 3), range(3, 5), range(2, 9)],
      [range(20, 22), range(0, 1), range(5, 5)],
      [range(-4, 99)],
    ];
    for (const soup of soups) {
      const segments = segmentBody(body, soup);
      expect(segments.map((s) => s.text).join("")).toBe(body);
      const styledRanges = segments.filter((s) => s.range).map((s) => s.range!);
      for (let i = 1; i < styledRanges.length; i++) {
        expect(styledRanges[i].start).toBeGreaterThanOrEqual(styledRanges[i - 1].end);
      }
    }
  });
});
