"""Regenerates test suites and the manifest from the repaired programs.

Run with the built Python module on the path, for example
    PYTHONPATH=build/python python corpus/generate.py
"""

import itertools
import json
import pathlib
import random

import minthint

HERE = pathlib.Path(__file__).resolve().parent


def esc_inputs(rng):
    nexts = ["\0", "n", "t", "a", "z", "1", "#", " ", "@", "9"]
    out = []
    for i in range(4):
        for c in nexts:
            for _ in range(2):
                s = [rng.choice("abcxyz01#") for _ in range(5)]
                s[i] = "@"
                s[i + 1] = c
                out.append(["".join(s), i])
        s = [rng.choice("abcxyz01#") for _ in range(5)]
        out.append(["".join(s), i])
    return out


def arith_inputs(rng):
    return [[i, j, k] for i in range(1, 3) for j in range(1, 6) for k in range(1, 26)]


def pairs(rng, lo, hi, n):
    return [[rng.randint(lo, hi), rng.randint(lo, hi)] for _ in range(n)]


def gate_inputs(rng):
    base = [[p, q, v] for p, q in itertools.product([False, True], repeat=2) for v in (3, 7, -2)]
    return base + [[rng.random() < 0.5, rng.random() < 0.5, rng.randint(-9, 9)] for _ in range(24)]


def loop_inputs(rng):
    out = []
    for n in range(0, 7):
        for _ in range(4):
            out.append([[rng.randint(1, 9) for _ in range(6)], n])
    return out


def mid3_classic():
    return [[3, 3, 5], [1, 2, 3], [3, 2, 1], [5, 5, 5], [5, 3, 4], [2, 1, 3]]


def mid3_inputs(rng):
    return mid3_classic() + [[rng.randint(-5, 9) for _ in range(3)] for _ in range(60)]


TASKS = [
    dict(id="esc_mini", inputs=esc_inputs, fault_line=4,
         golden=["Replace s[i] == '\\0' with s[i + 1] == '\\0'"]),
    dict(id="arith", inputs=arith_inputs, fault_line=2, golden=["Replace j / k with j * k"]),
    dict(id="max_op", inputs=lambda r: pairs(r, -20, 20, 40), fault_line=3, golden=["Replace a > b with a < b"]),
    dict(id="wrong_operand", inputs=lambda r: pairs(r, -30, 30, 40), fault_line=2,
         golden=["Replace a + 3 with a + b", "Replace 3 with b"]),
    dict(id="or_and", inputs=gate_inputs, fault_line=3, golden=["Replace p || q with p && q"]),
    dict(id="missing_operand", inputs=lambda r: pairs(r, 0, 40, 40), fault_line=2,
         golden=["Replace lo with lo + len"]),
    dict(id="superfluous", inputs=lambda r: [[r.randint(0, 50), r.randint(0, 20), r.randint(1, 15)]
                                             for _ in range(40)],
         fault_line=2, golden=["Retain base + bonus and Remove fee"]),
    dict(id="loop_bound", inputs=loop_inputs, fault_line=4, golden=["[cond] Replace i < n - 1 with i < n"]),
    dict(id="mid3", inputs=mid3_inputs, fault_line=7, golden=["Replace y with x"]),
    dict(id="ternary_return", inputs=lambda r: pairs(r, -15, 15, 40), fault_line=3,
         golden=["[else] Replace b + a with b - a"]),
]


def write_suite(path, repaired, inputs, prefix="t"):
    lines = []
    for n, args in enumerate(inputs):
        expect = minthint.run(repaired, args)
        lines.append(json.dumps({"id": f"{prefix}{n:03d}", "args": args, "expect": expect}))
    path.write_text("\n".join(lines) + "\n")


def main():
    manifest = []
    for task in TASKS:
        d = HERE / task["id"]
        repaired = (d / "repaired.mh").read_text()
        rng = random.Random(task["id"])
        write_suite(d / "tests.jsonl", repaired, task["inputs"](rng))
        manifest.append({
            "id": task["id"],
            "faulty": f"{task['id']}/faulty.mh",
            "repaired": f"{task['id']}/repaired.mh",
            "tests": f"{task['id']}/tests.jsonl",
            "fault_line": task["fault_line"],
            "golden": [{"line": task["fault_line"], "text": t} for t in task["golden"]],
        })
    write_suite(HERE / "mid3" / "tests6.jsonl", (HERE / "mid3" / "repaired.mh").read_text(), mid3_classic())
    (HERE / "manifest.json").write_text(json.dumps({"tasks": manifest}, indent=2) + "\n")


if __name__ == "__main__":
    main()
