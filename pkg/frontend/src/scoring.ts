export interface ScoreResult {
  score: number;
  tier: number;
}

/** Transport to the native host; the background script implements this. */
export interface HostMessenger {
  send(message: { type: "score"; headline: string }): Promise<unknown>;
}

export class HostError extends Error {}

/**
 * Ask the host to score a headline. Any malformed or error reply becomes a
 * HostError so callers can fail open.
 */
export async function requestScore(
  headline: string,
  messenger: HostMessenger,
): Promise<ScoreResult> {
  let reply: unknown;
  try {
    reply = await messenger.send({ type: "score", headline });
  } catch (err) {
    throw new HostError(`native host unreachable: ${String(err)}`);
  }
  if (typeof reply !== "object" || reply === null) {
    throw new HostError("malformed host reply");
  }
  const body = reply as Record<string, unknown>;
  if (body.type === "error") {
    throw new HostError(`host error: ${String(body.message)}`);
  }
  if (
    body.type !== "result" ||
    typeof body.score !== "number" ||
    typeof body.tier !== "number"
  ) {
    throw new HostError("malformed host reply");
  }
  return { score: body.score, tier: body.tier };
}
