#!/usr/bin/env python3
"""Minimal DIMACS CNF solver with the conventional interface.

Reads one DIMACS file, prints an `s SATISFIABLE` / `s UNSATISFIABLE` status
line (plus a `v` model line when satisfiable), and exits 10 / 20. Intended as
a stand-in external solver for cross-checking exports at desk scale; it is a
plain DPLL with unit propagation, not a performance tool.
"""

import sys


def parse(path):
    clauses = []
    nvars = 0
    with open(path) as fh:
        for line in fh:
            tok = line.split()
            if not tok or tok[0] in ("c", "%"):
                continue
            if tok[0] == "p":
                nvars = int(tok[2])
                continue
            lits = [int(t) for t in tok]
            if lits and lits[-1] == 0:
                lits.pop()
            if lits:
                clauses.append(lits)
            elif tok and tok[0] == "0":
                clauses.append([])
    return nvars, clauses


def propagate(clauses, assign):
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            unassigned = []
            satisfied = False
            for lit in clause:
                val = assign.get(abs(lit))
                if val is None:
                    unassigned.append(lit)
                elif (lit > 0) == val:
                    satisfied = True
                    break
            if satisfied:
                continue
            if not unassigned:
                return False
            if len(unassigned) == 1:
                lit = unassigned[0]
                assign[abs(lit)] = lit > 0
                changed = True
    return True


def solve(nvars, clauses, assign):
    assign = dict(assign)
    if not propagate(clauses, assign):
        return None
    try:
        var = next(v for v in range(1, nvars + 1) if v not in assign)
    except StopIteration:
        return assign
    for value in (False, True):
        model = solve(nvars, clauses, {**assign, var: value})
        if model is not None:
            return model
    return None


def main():
    if len(sys.argv) != 2:
        print("usage: dimacs_solve.py FILE.cnf", file=sys.stderr)
        return 1
    nvars, clauses = parse(sys.argv[1])
    sys.setrecursionlimit(10000 + 10 * nvars)
    model = solve(nvars, clauses, {})
    if model is None:
        print("s UNSATISFIABLE")
        return 20
    print("s SATISFIABLE")
    lits = [v if model.get(v, False) else -v for v in range(1, nvars + 1)]
    print("v " + " ".join(str(l) for l in lits) + " 0")
    return 10


if __name__ == "__main__":
    sys.exit(main())
