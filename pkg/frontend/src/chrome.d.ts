// Minimal ambient typings for the extension APIs this project touches.

interface ChromePort {
  postMessage(message: unknown): void;
  disconnect(): void;
  onMessage: {
    addListener(listener: (message: unknown) => void): void;
  };
  onDisconnect: {
    addListener(listener: () => void): void;
  };
}

interface ChromeRuntime {
  lastError?: { message?: string };
  sendMessage(message: unknown, callback?: (response: unknown) => void): void;
  connectNative(application: string): ChromePort;
  onMessage: {
    addListener(
      listener: (
        message: unknown,
        sender: unknown,
        sendResponse: (response: unknown) => void,
      ) => boolean | void,
    ): void;
  };
}

declare const chrome: { runtime: ChromeRuntime };
