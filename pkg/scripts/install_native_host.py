#!/usr/bin/env python3
"""Register the native-messaging host with a browser.

Native manifests cannot pass arguments to the host binary, so this writes a
small launcher script that sets CLICKGUARD_MODEL and execs `clickguard host`,
then a manifest named deep_breath.json pointing at it.

  python scripts/install_native_host.py --model model.json \
      --browser firefox --extension clickguard@example.org
"""

import argparse
import json
import os
import platform
import shutil
import sys
from pathlib import Path

from clickguard.msghost import HOST_NAME, native_manifest

MANIFEST_DIRS = {
    ("Linux", "firefox"): "~/.mozilla/native-messaging-hosts",
    ("Linux", "chrome"): "~/.config/google-chrome/NativeMessagingHosts",
    ("Linux", "chromium"): "~/.config/chromium/NativeMessagingHosts",
    ("Darwin", "firefox"): "~/Library/Application Support/Mozilla/NativeMessagingHosts",
    ("Darwin", "chrome"): "~/Library/Application Support/Google/Chrome/NativeMessagingHosts",
    ("Darwin", "chromium"): "~/Library/Application Support/Chromium/NativeMessagingHosts",
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--model", type=Path, required=True, help="trained model artifact")
    parser.add_argument("--browser", choices=("firefox", "chrome", "chromium"), default="firefox")
    parser.add_argument(
        "--extension", action="append", required=True,
        help="extension id (repeatable); chrome-extension://.../ origins for Chromium",
    )
    parser.add_argument("--dest", type=Path, help="override the manifest directory")
    parser.add_argument("--launcher-dir", type=Path,
                        default=Path("~/.local/share/clickguard").expanduser())
    parser.add_argument("--dry-run", action="store_true")
    args = parser.parse_args()

    key = (platform.system(), args.browser)
    dest = args.dest or Path(MANIFEST_DIRS.get(key, MANIFEST_DIRS[("Linux", args.browser)])).expanduser()
    cli = shutil.which("clickguard") or f"{sys.executable} -m clickguard"
    launcher = args.launcher_dir / f"{HOST_NAME}_host.sh"
    launcher_body = (
        "#!/bin/sh\n"
        f'CLICKGUARD_MODEL="{args.model.resolve()}" exec {cli} host\n'
    )
    manifest = native_manifest(launcher, args.extension)
    manifest_path = dest / f"{HOST_NAME}.json"

    if args.dry_run:
        print(f"would write {launcher}:\n{launcher_body}")
        print(f"would write {manifest_path}:\n{json.dumps(manifest, indent=2)}")
        return 0

    args.launcher_dir.mkdir(parents=True, exist_ok=True)
    launcher.write_text(launcher_body, encoding="utf-8")
    os.chmod(launcher, 0o755)
    dest.mkdir(parents=True, exist_ok=True)
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {launcher}")
    print(f"wrote {manifest_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
