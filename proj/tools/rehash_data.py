#!/usr/bin/env python3
"""Recompute the checksum field of the data files.

Usage: rehash_data.py [--check] [FILE...]   (default: every data/*.json)
"""
import argparse
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def fnv1a64(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return "%016x" % h


def payload_hash(payload) -> str:
    # same bytes as nlohmann::json::dump(): sorted keys, no whitespace, raw UTF-8
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "fnv1a64:" + fnv1a64(text.encode("utf-8"))


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="only report files whose checksum is stale")
    ap.add_argument("files", nargs="*", type=pathlib.Path)
    args = ap.parse_args()
    files = args.files or sorted((ROOT / "data").glob("*.json"))
    stale = 0
    for f in files:
        doc = json.loads(f.read_text(encoding="utf-8"))
        want = payload_hash(doc["payload"])
        if doc.get("checksum") == want:
            continue
        stale += 1
        if args.check:
            print(f"{f}: stale checksum")
            continue
        doc["checksum"] = want
        f.write_text(json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
        print(f"{f}: updated")
    return 1 if args.check and stale else 0


if __name__ == "__main__":
    sys.exit(main())
