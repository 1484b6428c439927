// Background bridge: one persistent native-messaging port to the host
// registered as deep_breath. The host answers strictly in request order,
// so pending resolvers form a FIFO queue. On disconnect every pending
// request gets an in-band error (content scripts fail open on those).

const HOST_NAME = "deep_breath";

interface ScoreMessage {
  kind: "clickguard-score";
  headline: string;
}

type Reply = (response: unknown) => void;

let port: ChromePort | null = null;
let pending: Reply[] = [];

function isScoreMessage(message: unknown): message is ScoreMessage {
  return (
    typeof message === "object" &&
    message !== null &&
    (message as ScoreMessage).kind === "clickguard-score" &&
    typeof (message as ScoreMessage).headline === "string"
  );
}

function hostPort(): ChromePort {
  if (port) {
    return port;
  }
  port = chrome.runtime.connectNative(HOST_NAME);
  port.onMessage.addListener((response) => {
    pending.shift()?.(response);
  });
  port.onDisconnect.addListener(() => {
    const dropped = pending;
    pending = [];
    port = null;
    const message =
      chrome.runtime.lastError?.message ?? "native host disconnected";
    for (const reply of dropped) {
      reply({ type: "error", message });
    }
  });
  return port;
}

chrome.runtime.onMessage.addListener((message, _sender, sendResponse) => {
  if (!isScoreMessage(message)) {
    return;
  }
  try {
    pending.push(sendResponse);
    hostPort().postMessage({ type: "score", headline: message.headline });
  } catch (err) {
    pending = pending.filter((reply) => reply !== sendResponse);
    sendResponse({ type: "error", message: String(err) });
  }
  return true; // keep the channel open for the async native reply
});
