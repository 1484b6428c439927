// Content script: scores the page headline through the background bridge
// and raises the interstitial warning when the tier warrants one.

import { guardPage } from "./guard.js";
import { HostMessenger } from "./scoring.js";

const backgroundMessenger: HostMessenger = {
  send(message) {
    return new Promise((resolve, reject) => {
      chrome.runtime.sendMessage(
        { kind: "clickguard-score", headline: message.headline },
        (response) => {
          if (chrome.runtime.lastError) {
            reject(new Error(chrome.runtime.lastError.message ?? "no reply"));
          } else {
            resolve(response);
          }
        },
      );
    });
  },
};

void guardPage(document, backgroundMessenger);
