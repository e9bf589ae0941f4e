"""
Text input and verification reports
===================================

Matrices are read from a small text format, and every check returns a
report whose counterexample (if any) can be parsed back.
"""

import json

from ncch import parse_element, parse_matrix
from ncch.exprparse import format_document
from ncch.grassmann import GrassmannAlgebra
from ncch.theorems import default_suite, run_suite

doc = """
# generic 2x2 matrix
ring: free a, b, c, d
a, b
c, d
"""
A = parse_matrix(doc)
print(format_document(A))

print(parse_element("[v1, v2] + 1/2*v3", GrassmannAlgebra(3)))

reports = run_suite(default_suite(seed=0))
print(sum(r.passed for r in reports), "of", len(reports), "checks pass")
print(json.dumps(reports[0].to_dict(), indent=2))
