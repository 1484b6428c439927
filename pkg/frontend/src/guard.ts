import { extractHeadline } from "./headline.js";
import { WarningOverlay, WarningState } from "./overlay.js";
import { HostMessenger, requestScore } from "./scoring.js";

/**
 * The whole content-side flow for one page view: extract the headline, get
 * it scored, and raise the interstitial when the tier warrants one. Fails
 * open: any host problem leaves the page untouched. Returns the overlay
 * state, or null when no warning flow ran.
 */
export async function guardPage(
  doc: Document,
  messenger: HostMessenger,
  overlay?: WarningOverlay,
): Promise<WarningState | null> {
  const headline = extractHeadline(doc);
  if (!headline) {
    return null;
  }
  let result;
  try {
    result = await requestScore(headline.text, messenger);
  } catch {
    return null; // fail open: never block reading
  }
  if (result.tier < 1) {
    return null;
  }
  const controller = overlay ?? new WarningOverlay(doc);
  return controller.show(result.tier);
}
