export type WarningSymbol =
  | "magnifying-glass"
  | "warning-sign"
  | "stop-sign"
  | "authority-figure";

export interface WarningVariant {
  tier: number;
  symbol: WarningSymbol;
  glyph: string;
  colour: string;
  /** gradient stops, least to most intense */
  gradient: [string, string];
  heading: string;
  advice: string;
}

/**
 * The five warning variants, least to most severe. Mirrors the host-side
 * table: tiers 1-2 nudge towards critical thinking with the magnifying
 * glass, 3-5 escalate through alert symbols while the gradient shifts from
 * yellow through orange to red.
 */
const VARIANTS: readonly WarningVariant[] = [
  {
    tier: 1,
    symbol: "magnifying-glass",
    glyph: "\u{1F50D}",
    colour: "yellow",
    gradient: ["#f8e71c", "#f5d76e"],
    heading: "This headline shows mild signs of sensationalism.",
    advice: "Read with a critical eye before accepting any claims.",
  },
  {
    tier: 2,
    symbol: "magnifying-glass",
    glyph: "\u{1F50D}",
    colour: "amber",
    gradient: ["#ffc107", "#ffb300"],
    heading: "This headline looks designed to provoke rather than inform.",
    advice: "Consider checking how other outlets report this story.",
  },
  {
    tier: 3,
    symbol: "warning-sign",
    glyph: "⚠️",
    colour: "orange",
    gradient: ["#ff9800", "#f57c00"],
    heading: "This page is likely to contain misleading content.",
    advice: "Consider finding alternative sources before reading on.",
  },
  {
    tier: 4,
    symbol: "stop-sign",
    glyph: "\u{1F6D1}",
    colour: "orange-red",
    gradient: ["#ff5722", "#e64a19"],
    heading: "This page shows strong signs of misinformation.",
    advice: "Verify these claims with a trusted outlet before continuing.",
  },
  {
    tier: 5,
    symbol: "authority-figure",
    glyph: "\u{1F46E}",
    colour: "red",
    gradient: ["#f44336", "#b71c1c"],
    heading: "This page is very likely misinformation.",
    advice: "Leave this page and consult a reputable source instead.",
  },
];

export function warningVariant(tier: number): WarningVariant {
  const variant = VARIANTS[tier - 1];
  if (!variant) {
    throw new RangeError(`warning tier must be 1..5, got ${tier}`);
  }
  return variant;
}

export const WARNING_TIERS = [1, 2, 3, 4, 5] as const;
