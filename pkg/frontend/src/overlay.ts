import { warningVariant } from "./warnings.js";

export interface WarningState {
  visible: boolean;
  tier: number;
  scrollLocked: boolean;
}

export interface NavigationTarget {
  historyLength: number;
  back(): void;
  assign(url: string): void;
}

const OVERLAY_ID = "clickguard-warning-overlay";
const STYLE_ID = "clickguard-warning-style";
const NEUTRAL_PAGE = "about:blank";

function navigationFromWindow(win: Window): NavigationTarget {
  return {
    historyLength: win.history.length,
    back: () => win.history.back(),
    assign: (url) => win.location.assign(url),
  };
}

/**
 * Owns the single interstitial overlay for one page: full-page darkened
 * backdrop, oscillating per-tier gradient behind the warning card, symbol,
 * heading and advice copy, and the leave/dismiss button pair. Scrolling is
 * locked exactly while the overlay is visible.
 */
export class WarningOverlay {
  private doc: Document;
  private navigation: NavigationTarget;
  private overlay: HTMLElement | null = null;
  private savedOverflow = "";
  tier = 0;

  constructor(doc: Document, navigation?: NavigationTarget) {
    this.doc = doc;
    this.navigation = navigation ?? navigationFromWindow(doc.defaultView as Window);
  }

  get visible(): boolean {
    return this.overlay !== null;
  }

  get scrollLocked(): boolean {
    return this.visible;
  }

  state(): WarningState {
    return { visible: this.visible, tier: this.tier, scrollLocked: this.scrollLocked };
  }

  /** Render the variant for `tier`; a second call is a no-op while visible. */
  show(tier: number): WarningState {
    const variant = warningVariant(tier);
    if (this.overlay) {
      return this.state();
    }
    this.ensureStyles();
    const overlay = this.doc.createElement("div");
    overlay.id = OVERLAY_ID;
    overlay.className = "clickguard-backdrop";

    const card = this.doc.createElement("div");
    card.className = "clickguard-card";
    card.style.backgroundImage = `linear-gradient(120deg, ${variant.gradient[0]}, ${variant.gradient[1]}, ${variant.gradient[0]})`;

    const symbol = this.doc.createElement("div");
    symbol.className = "clickguard-symbol";
    symbol.dataset.symbol = variant.symbol;
    symbol.textContent = variant.glyph;

    const heading = this.doc.createElement("h2");
    heading.className = "clickguard-heading";
    heading.textContent = variant.heading;

    const advice = this.doc.createElement("p");
    advice.className = "clickguard-advice";
    advice.textContent = variant.advice;

    const buttons = this.doc.createElement("div");
    buttons.className = "clickguard-buttons";

    const leave = this.doc.createElement("button");
    leave.className = "clickguard-leave";
    leave.textContent = "Leave page (Recommended)";
    leave.addEventListener("click", () => this.leave());

    const dismiss = this.doc.createElement("button");
    dismiss.className = "clickguard-dismiss";
    dismiss.textContent = "Dismiss and continue";
    dismiss.addEventListener("click", () => this.dismiss());

    buttons.append(leave, dismiss);
    card.append(symbol, heading, advice, buttons);
    overlay.append(card);
    this.doc.body.append(overlay);

    this.savedOverflow = this.doc.body.style.overflow;
    this.doc.body.style.overflow = "hidden";
    this.overlay = overlay;
    this.tier = tier;
    return this.state();
  }

  /** Remove the overlay and restore scrolling. */
  dismiss(): WarningState {
    if (this.overlay) {
      this.overlay.remove();
      this.overlay = null;
      this.doc.body.style.overflow = this.savedOverflow;
      this.tier = 0;
    }
    return this.state();
  }

  /** Navigate away: back when there is history, otherwise a neutral page. */
  leave(): void {
    this.dismiss();
    if (this.navigation.historyLength > 1) {
      this.navigation.back();
    } else {
      this.navigation.assign(NEUTRAL_PAGE);
    }
  }

  private ensureStyles(): void {
    if (this.doc.getElementById(STYLE_ID)) {
      return;
    }
    const style = this.doc.createElement("style");
    style.id = STYLE_ID;
    style.textContent = `
#${OVERLAY_ID} {
  position: fixed; inset: 0; z-index: 2147483647;
  background: rgba(0, 0, 0, 0.75);
  display: flex; align-items: center; justify-content: center;
}
#${OVERLAY_ID} .clickguard-card {
  max-width: 34rem; padding: 2.5rem; border-radius: 12px; text-align: center;
  color: #1a1a1a; font-family: system-ui, sans-serif;
  background-size: 300% 300%;
  animation: clickguard-oscillate 6s ease-in-out infinite;
}
@keyframes clickguard-oscillate {
  0% { background-position: 0% 50%; }
  50% { background-position: 100% 50%; }
  100% { background-position: 0% 50%; }
}
#${OVERLAY_ID} .clickguard-symbol { font-size: 3rem; }
#${OVERLAY_ID} .clickguard-heading { margin: 1rem 0 0.5rem; font-size: 1.4rem; }
#${OVERLAY_ID} .clickguard-advice { margin: 0 0 1.5rem; font-size: 1rem; }
#${OVERLAY_ID} .clickguard-buttons { display: flex; gap: 1rem; justify-content: center; }
#${OVERLAY_ID} button {
  padding: 0.7rem 1.2rem; border: none; border-radius: 6px;
  font-size: 1rem; cursor: pointer;
}
#${OVERLAY_ID} .clickguard-leave { background: #1e8e3e; color: #fff; font-weight: 600; }
#${OVERLAY_ID} .clickguard-dismiss {
  background: #c62828; color: #fff; opacity: 0.35; transition: opacity 0.2s;
}
#${OVERLAY_ID} .clickguard-dismiss:hover { opacity: 1; }
`;
    this.doc.head.append(style);
  }
}
