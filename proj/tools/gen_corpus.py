#!/usr/bin/env python3
"""Writes the 50-case labeled fixture corpus (java/, python/, labels.json).

Each case's source files carry exactly the surface features the error
categories key on, so labels and mock-translator triggers agree:

  J2P (Java source)         P2J (Python source)
  main method   -> AC       __main__ block    -> AC
  complex for   -> LC       while loop        -> EC
  array param   -> TS       >= 2 arr params   -> TS
  Math . call   -> Misc     math . call       -> Misc
"""
import json
import sys
from pathlib import Path

N = 50
J2P_LC = set(range(1, 7))
J2P_TS = {1, 2} | set(range(7, 24))
J2P_AC = set(range(24, 33))
J2P_MISC = set(range(33, 40))
P2J_EC = set(range(1, 26))
P2J_TS = {7, 8}
P2J_AC = set(range(9, 20)) | set(range(26, 33)) | {50}
P2J_MISC = set(range(33, 41))


def labels(i):
    j2p, p2j = [], []
    for name, ids in (("AdditionalContext", J2P_AC), ("LoopConversion", J2P_LC),
                      ("TypeSensitivity", J2P_TS), ("Miscellaneous", J2P_MISC)):
        if i in ids:
            j2p.append(name)
    for name, ids in (("AdditionalContext", P2J_AC), ("TypeSensitivity", P2J_TS),
                      ("ExtraConstraints", P2J_EC), ("Miscellaneous", P2J_MISC)):
        if i in ids:
            p2j.append(name)
    return j2p or ["MostlyCorrect"], p2j or ["MostlyCorrect"]


def indent(lines, n):
    return [" " * n + l for l in lines]


def case(i):
    arrays = 2 if i in P2J_TS else (1 if i in J2P_TS else 0)
    names = ["arr1", "arr2"] if arrays == 2 else (["arr"] if arrays == 1 else [])
    jparams = [f"int {a} [ ]" for a in names] + ["int n"]
    pparams = names + ["n"]
    elem = names[0] + " [ i ]" if names else f"i * {i % 5 + 1}"
    if arrays == 2:
        elem = "arr1 [ i ] + arr2 [ i ]"

    jbody = [f"int result = {i} ;"]
    pbody = [f"result = {i}"]
    if i in J2P_LC:
        jbody += ["for ( int i = 0 , j = n - 1 ;", "i < j ;", "i ++ , j -- ) {",
                  f"  result += {elem} - j ;", "}"]
        pbody += ["i = 0", "j = n - 1", "while i < j :",
                  f"    result += {elem} - j", "    i += 1", "    j -= 1"]
    elif i in P2J_EC:
        two = i % 2 == 0
        jcond = "i < n && result < 100000" if two else "i < n"
        pcond = "i < n and result < 100000" if two else "i < n"
        jbody += ["int i = 0 ;", f"while ( {jcond} ) {{", f"  result += {elem} ;", "  i ++ ;", "}"]
        pbody += ["i = 0", f"while {pcond} :", f"    result += {elem}", "    i += 1"]
    else:
        jbody += ["for ( int i = 0 ;", "i < n ;", "i ++ ) {", f"  result += {elem} ;", "}"]
        pbody += ["for i in range ( n ) :", f"    result += {elem}"]
    if i % 3 == 0:
        jbody += [f"if ( result % {i % 7 + 2} == 0 ) {{", "  result = result / 2 ;", "}",
                  "else {", "  result = result + 1 ;", "}"]
        pbody += [f"if result % {i % 7 + 2} == 0 :", "    result = result // 2",
                  "else :", "    result = result + 1"]
    if i in J2P_MISC:
        jbody += ["result = Math . abs ( result ) ;"]
    elif i in P2J_MISC:
        jbody += ["if ( result < 0 ) {", "  result = - result ;", "}"]
    if i in P2J_MISC:
        pbody = ["import math"] + pbody + ["result = int ( math . fabs ( result ) )"]
    elif i in J2P_MISC:
        pbody += ["result = abs ( result )"]
    jbody += ["return result ;"]
    pbody += ["return result"]

    jmethod = [f"static int f_gold ( {' , '.join(jparams)} ) {{"] + indent(jbody, 2) + ["}"]
    pmethod = [f"def f_gold ( {' , '.join(pparams)} ) :"] + indent(pbody, 4)

    args_j = ", ".join([f"new int [ ] {{ {i} , 2 , 3 }}" for _ in names] + ["3"])
    if i in J2P_AC:
        java = (["import java . util . * ;", "", "class GFG {"] + indent(jmethod, 2) +
                ["", "  public static void main ( String args [ ] ) {",
                 f"    System . out . println ( f_gold ( {args_j} ) ) ;", "  }", "}"])
    else:
        java = jmethod
    if i in P2J_AC:
        args_p = " , ".join([f"[ {i} , 2 , 3 ]" for _ in names] + ["3"])
        python = (pmethod + ["", "", "if __name__ == '__main__' :",
                             f"    param = [ ( {args_p} , ) ]",
                             "    for p in param :",
                             "        print ( f_gold ( * p ) )"])
    else:
        python = pmethod
    return "\n".join(java) + "\n", "\n".join(python) + "\n"


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/corpus")
    (root / "java").mkdir(parents=True, exist_ok=True)
    (root / "python").mkdir(parents=True, exist_ok=True)
    table = {}
    for i in range(1, N + 1):
        cid = f"case{i:03d}"
        java, python = case(i)
        (root / "java" / f"{cid}.java").write_text(java)
        (root / "python" / f"{cid}.py").write_text(python)
        j2p, p2j = labels(i)
        table[cid] = {"j2p": j2p, "p2j": p2j}
    (root / "labels.json").write_text(json.dumps(table, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
