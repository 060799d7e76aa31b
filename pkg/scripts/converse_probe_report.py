"""Summarize the broad-isotopy converse probe.

For each square of order <= 4 the probe asks whether the endpoints of the
four triple families are isotopic by *any* triple.  This script counts how
often that happens without associativity and lists a few witnesses.
"""
import argparse
import json
from collections import Counter, defaultdict

from qpl.suites import Record, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--examples", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="emit the counts as JSON")
    a = ap.parse_args()

    by_claim = defaultdict(Counter)
    all_four = Counter()
    examples = []
    per_instance = defaultdict(list)
    for item in run_suite("probe-isotopy-converse", max_order=a.max_order):
        if not isinstance(item, Record):
            continue
        by_claim[item.claim.split("/")[1]][(item.lhs, item.rhs)] += 1
        per_instance[item.instance].append(item)
    for iid, recs in per_instance.items():
        key = (all(r.lhs for r in recs), recs[0].rhs)
        all_four[key] += 1
        if key == (True, False) and len(examples) < a.examples:
            examples.append(iid)

    if a.json:
        print(json.dumps({
            "per_pair": {c: {f"{l}/{r}": v for (l, r), v in cnt.items()}
                         for c, cnt in by_claim.items()},
            "all_four": {f"{l}/{r}": v for (l, r), v in all_four.items()},
            "examples": examples,
        }, indent=2))
        return
    print("pair          isotopic&assoc  isotopic&not-assoc  not-isotopic")
    for claim, cnt in by_claim.items():
        print(f"{claim:13s} {cnt[(True, True)]:14d} {cnt[(True, False)]:19d} "
              f"{cnt[(False, False)] + cnt[(False, True)]:13d}")
    print(f"\nall four pairs isotopic but not associative: {all_four[(True, False)]}"
          f" of {sum(all_four.values())} squares")
    print("examples:", ", ".join(examples) or "-")


if __name__ == "__main__":
    main()
