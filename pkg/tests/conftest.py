import re

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")

_LABELS = {
    1: "shape recovery: class and conjugator over all four families",
    2: "scalings rejected unless lambda = +-1, exact probe polynomial",
    3: "pointwise witnesses for transpose and negation on sl_n",
    4: "characteristic polynomial probe vs cofactor oracle",
    5: "extended maps are local; anti S-blocks refuted by square certificates",
    6: "block structure of every extended automorphism",
    7: "squares ideal, right annihilation, liezation",
    8: "filiform: phi_alpha automorphism iff alpha = 1, delta locally covered",
    9: "exact kernel vs brute-force oracles, seeded round-trips",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    status = {}
    for key, worst in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(key, []):
            m = _PATTERN.search(getattr(rep, "nodeid", ""))
            if not m:
                continue
            if key == "passed" and rep.when != "call":
                continue
            num = int(m.group(1))
            if worst == "FAIL" or num not in status:
                status[num] = worst
    if not status:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(status):
        label = _LABELS.get(num, "")
        terminalreporter.write_line(f"criterion {num}: {status[num]}  {label}")
