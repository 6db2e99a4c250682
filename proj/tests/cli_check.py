#!/usr/bin/env python3
"""Run the CLI once and check its exit code and output.

usage: cli_check.py --rc N [--expect REGEX]... [--json PATH=VALUE]... [--twice] -- command args
"""
import argparse
import json
import re
import subprocess
import sys


def lookup(doc, path):
    for part in path.split("."):
        doc = doc[int(part)] if isinstance(doc, list) else doc[part]
    return doc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rc", type=int, default=0)
    ap.add_argument("--expect", action="append", default=[])
    ap.add_argument("--json", action="append", default=[])
    ap.add_argument("--env", action="append", default=[])
    ap.add_argument("--twice", action="store_true", help="require byte-identical output on a second run")
    ap.add_argument("cmd", nargs=argparse.REMAINDER)
    a = ap.parse_args()
    cmd = a.cmd[1:] if a.cmd and a.cmd[0] == "--" else a.cmd
    env = None
    if a.env:
        import os
        env = dict(os.environ)
        for kv in a.env:
            k, v = kv.split("=", 1)
            env[k] = v
    p = subprocess.run(cmd, capture_output=True, text=True, env=env)
    out = p.stdout
    failed = []
    if p.returncode != a.rc:
        failed.append(f"exit code {p.returncode}, expected {a.rc}; stderr: {p.stderr.strip()}")
    for rx in a.expect:
        if not re.search(rx, out + p.stderr):
            failed.append(f"pattern not found: {rx}")
    if a.json:
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            failed.append(f"output is not JSON: {e}")
            doc = None
        for item in a.json if doc is not None else []:
            path, want = item.split("=", 1)
            try:
                got = lookup(doc, path)
            except (KeyError, IndexError) as e:
                failed.append(f"{path}: missing ({e})")
                continue
            if json.dumps(got) != want:
                failed.append(f"{path}: got {json.dumps(got)}, expected {want}")
    if a.twice:
        q = subprocess.run(cmd, capture_output=True, text=True, env=env)
        if q.stdout != out:
            failed.append("second run produced different output")
    for f in failed:
        print("FAIL:", f)
    if failed:
        print(out[:2000])
        return 1
    print("ok:", " ".join(cmd))
    return 0


if __name__ == "__main__":
    sys.exit(main())
