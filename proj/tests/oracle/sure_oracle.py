#!/usr/bin/env python3
"""Naive reference evaluator for SURE scores, written independently of the
C++ engine. All arithmetic is exact (fractions.Fraction); results are printed
as the nearest double.

Usage: sure_oracle.py STRUCTURE QUESTIONNAIRE RESPONSES [--policy exclude|zero]
                      [--demographics a,b]

Prints a JSON object with general, key-goal and sub-goal aggregates, the
number of retained participants and the max/zero counts.
"""

import argparse
import csv
import json
from fractions import Fraction


def evaluate(structure, questionnaire, rows, policy="exclude"):
    top = len(questionnaire["scale"]) - 1
    by_sub = {}
    for q in questionnaire["questions"]:
        by_sub.setdefault(q["sub_goal"], []).append(q["id"])

    retained = []
    for row in rows:
        answers = {q["id"]: row[q["id"]].strip() for q in questionnaire["questions"]}
        if any(v == "" for v in answers.values()):
            if policy == "exclude":
                continue
            answers = {k: (v if v != "" else "0") for k, v in answers.items()}
        retained.append({k: int(v) for k, v in answers.items()})

    key_ids = [k["id"] for k in structure["key_goals"]]
    sub_ids = [s["id"] for k in structure["key_goals"] for s in k["sub_goals"]]
    general = Fraction(0)
    key_sum = {k: Fraction(0) for k in key_ids}
    sub_sum = {s: Fraction(0) for s in sub_ids}
    n_max = n_zero = 0
    for answers in retained:
        overall = Fraction(1)
        for k in structure["key_goals"]:
            fail = Fraction(1)
            for s in k["sub_goals"]:
                qs = by_sub[s["id"]]
                score = sum(Fraction(answers[q], top) for q in qs) / len(qs)
                sub_sum[s["id"]] += score
                fail *= 1 - score
            key_sum[k["id"]] += 1 - fail
            overall *= 1 - fail
        general += overall
        n_max += overall == 1
        n_zero += overall == 0

    n = len(retained)
    return {
        "n": n,
        "n_max": n_max,
        "n_zero": n_zero,
        "general": float(general / n),
        "key_goals": {k: float(v / n) for k, v in key_sum.items()},
        "sub_goals": {s: float(v / n) for s, v in sub_sum.items()},
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("structure")
    ap.add_argument("questionnaire")
    ap.add_argument("responses")
    ap.add_argument("--policy", default="exclude", choices=["exclude", "zero"])
    args = ap.parse_args()

    with open(args.structure, encoding="utf-8") as f:
        structure = json.load(f)
    with open(args.questionnaire, encoding="utf-8") as f:
        questionnaire = json.load(f)
    with open(args.responses, newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    print(json.dumps(evaluate(structure, questionnaire, rows, args.policy), indent=2))


if __name__ == "__main__":
    main()
