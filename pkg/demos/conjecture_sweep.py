"""
Exhaustive sweep: disconnected domains against edgeless codomains
=================================================================

"""

from digitop import conjecture_search

# every disconnected domain up to 5 points (by component sizes) against
# discrete codomains of 2 and 3 points; does CS_i ever grow past CS_2?
reports = conjecture_search(max_x_points=5, max_y_points=3, i_max=4)

for report in reports:
    if report.instance == "reduction-note":
        print("reduction:", report.details["note"])
        continue
    print(f"{report.verdict:4}  {report.instance}")
    print("      CS_2 =", report.details["observed"]["2"])

fails = sum(1 for r in reports if r.verdict == "fail")
print("counterexamples found:", fails)
