/** Pure presentation helpers: similarity text, bar geometry, leaning colors. */

import type { Leaning, LeaningValues } from "./types.js";

export const LEANING_ORDER: Leaning[] = ["left", "neutral", "right"];

/** Okabe-Ito hues: distinguishable under the common color-vision deficiencies. */
export const LEANING_COLORS: Record<Leaning, string> = {
  left: "#0072b2",
  neutral: "#8c8c8c",
  right: "#e69f00",
};

/** Similarity is always rendered with exactly three decimals. */
export function formatSimilarity(value: number): string {
  return value.toFixed(3);
}

export interface BarSegment {
  leaning: Leaning;
  /** Integer basis points (1/100 of a percent); segments sum to exactly 10000. */
  basisPoints: number;
  /** CSS width, e.g. "50.25%". */
  width: string;
}

/**
 * Split a leaning distribution into bar segments that always total exactly
 * 100% of the bar, using largest-remainder rounding at basis-point
 * granularity. Returns null for an all-zero distribution (no matches), so
 * callers render an explicit empty state instead of a NaN-width bar.
 */
export function barSegments(distribution: LeaningValues): BarSegment[] | null {
  const total = LEANING_ORDER.reduce((sum, leaning) => sum + distribution[leaning], 0);
  if (!(total > 0)) {
    return null;
  }
  const exact = LEANING_ORDER.map((leaning) => (distribution[leaning] / total) * 10000);
  const floors = exact.map(Math.floor);
  let shortfall = 10000 - floors.reduce((a, b) => a + b, 0);
  const order = LEANING_ORDER.map((_, index) => index).sort(
    (a, b) => exact[b] - floors[b] - (exact[a] - floors[a]),
  );
  for (const index of order) {
    if (shortfall <= 0) break;
    floors[index] += 1;
    shortfall -= 1;
  }
  return LEANING_ORDER.map((leaning, index) => ({
    leaning,
    basisPoints: floors[index],
    width: `${(floors[index] / 100).toFixed(2)}%`,
  }));
}

export function formatVotes(votes: LeaningValues): string {
  return LEANING_ORDER.map((leaning) => `${leaning} ${votes[leaning]}`).join(" · ");
}

export function formatPercent(fraction: number): string {
  return `${Math.round(fraction * 100)}%`;
}
